"""
	The reference runs behind the `reproduce` command. Every preset probes a 1 MHz, 1.1e-11 kg cantilever
	with η = 1, pins κ²_avg to 2π×197 s⁻¹ and gates at |cos(ωt)| > 0.9 after 2.5 free periods.
"""
import math
from dataclasses import replace
from typing import Dict, List

from squeezing.dataio.configuration import RunConfig
from squeezing.oscillator.parameters import ConfigurationError

ZOOM_DURATION = 20e-6
FULL_DURATION = 400e-6

_COMMON = RunConfig(
	omega = 2 * math.pi * 1e6,
	mass = 1.1e-11,
	eta = 1.0,
	kappa_sq_avg = 2 * math.pi * 197,
	pulse_mode = "stroboscopic",
	pulse_threshold = 0.9,
	pulse_phase = 0.0,
	peak_policy = "ten_times_avg",
	warmup_periods = 2.5,
	initial_policy = "thermal",
	steps_per_period = 1000
)


def _preset(name: str, temperature_mK: float, gamma: float, duration: float) -> RunConfig:
	config = replace(
		_COMMON,
		temperature_mK = temperature_mK,
		gamma = gamma,
		duration = duration,
		preset = name,
		output_name = name
	)
	return config.resolve()


PRESETS: Dict[str, RunConfig] = {
	'fig-zoom-10mK':     _preset('fig-zoom-10mK', 10.0, 2 * math.pi * 10, ZOOM_DURATION),
	'fig-10mK':          _preset('fig-10mK', 10.0, 2 * math.pi * 10, FULL_DURATION),
	'fig-0p7mK':         _preset('fig-0p7mK', 0.7, 2 * math.pi * 10, FULL_DURATION),
	'fig-10mK-gamma0p1': _preset('fig-10mK-gamma0p1', 10.0, 2 * math.pi * 0.1, FULL_DURATION),
	'fig-zoom-0K':       _preset('fig-zoom-0K', 0.0, 2 * math.pi * 10, ZOOM_DURATION),
	'fig-0K':            _preset('fig-0K', 0.0, 2 * math.pi * 10, FULL_DURATION),
}


def available_presets() -> List[str]:
	return list(PRESETS.keys())


def get_preset(name: str) -> RunConfig:
	try:
		return PRESETS[name]
	except KeyError:
		message = f"Unknown preset '{name}'. Expected one of {available_presets()}"
		raise ConfigurationError(message)
