"""
	The run configuration: a flat `key = value` document whose dotted keys map one-to-one onto the fields of `RunConfig`.

	oscillator.omega = 6283185.307179586
	bath.temperature_mK = 10
	# Comments and blank lines are ignored.
	pulse.threshold = 0.9
"""
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from squeezing import widgets
from squeezing.oscillator import dynamics
from squeezing.oscillator.dynamics import CovarianceState
from squeezing.oscillator.parameters import ConfigurationError, DerivedParams, PhysicalParams, derive
from squeezing.oscillator.schedule import PulseSchedule, build_schedule, duty_cycle

INITIAL_POLICIES = ["thermal", "ground", "explicit"]
# The output grid used when `run.grid_dt` is not given, in samples per mechanical period.
DEFAULT_SAMPLES_PER_PERIOD = 100


@dataclass(frozen = True)
class RunConfig:
	omega: float = 2 * math.pi * 1e6
	mass: float = 1.1e-11
	gamma: float = 2 * math.pi * 10
	temperature_mK: float = 0.0
	eta: float = 1.0
	beta: float = 6.5e-7
	photon_flux: float = 2.92e15
	# `None` means 2β²Φ.
	kappa_sq_avg: Optional[float] = None
	pulse_mode: str = "stroboscopic"
	pulse_threshold: float = 0.9
	pulse_phase: float = 0.0
	peak_policy: str = "ten_times_avg"
	kappa_sq_peak: Optional[float] = None
	warmup_periods: float = 2.5
	initial_policy: str = "thermal"
	initial_a11: float = 1.0
	initial_a12: float = 0.0
	initial_a21: float = 0.0
	initial_a22: float = 1.0
	duration: float = 2e-5
	# `None` until resolved, then period / DEFAULT_SAMPLES_PER_PERIOD.
	grid_dt: Optional[float] = None
	steps_per_period: int = 1000
	preset: Optional[str] = None
	output_folder: str = "output"
	output_name: str = "simulation"
	output_plot: bool = True

	@property
	def temperature(self) -> float:
		""" The bath temperature in kelvin. """
		return self.temperature_mK * 1e-3

	@property
	def period(self) -> float:
		return widgets.mechanical_period(self.omega)

	def physical_params(self) -> PhysicalParams:
		return PhysicalParams(
			omega = self.omega,
			mass = self.mass,
			gamma = self.gamma,
			eta = self.eta,
			temperature = self.temperature,
			beta = self.beta,
			photon_flux = self.photon_flux
		)

	def derived(self) -> DerivedParams:
		return derive(self.physical_params(), self.kappa_sq_avg)

	def schedule(self, derived: Optional[DerivedParams] = None) -> PulseSchedule:
		if derived is None:
			derived = self.derived()
		return build_schedule(
			mode = self.pulse_mode,
			threshold = self.pulse_threshold,
			phase = self.pulse_phase,
			peak_policy = self.peak_policy,
			kappa_sq_avg = derived.kappa_sq_avg,
			kappa_sq_peak = self.kappa_sq_peak,
			warmup_periods = self.warmup_periods,
			omega = self.omega
		)

	def initial_state(self, derived: Optional[DerivedParams] = None) -> CovarianceState:
		if self.initial_policy == "ground":
			return dynamics.ground_state()
		if self.initial_policy == "explicit":
			return CovarianceState(t = 0.0, a11 = self.initial_a11, a12 = self.initial_a12, a21 = self.initial_a21,
				a22 = self.initial_a22)
		if derived is None:
			derived = self.derived()
		return dynamics.thermal_state(derived.capN)

	def resolve(self) -> 'RunConfig':
		""" Fills in every value that defaults to something computed, then validates the result. """
		validate_config(self)
		if self.grid_dt is not None:
			return self
		config = replace(self, grid_dt = self.period / DEFAULT_SAMPLES_PER_PERIOD)
		validate_config(config)
		return config


def _parse_float(value: str) -> float:
	try:
		number = float(value)
	except ValueError:
		message = f"'{value}' is not a number"
		raise ConfigurationError(message)
	if not math.isfinite(number):
		message = f"'{value}' is not a finite number"
		raise ConfigurationError(message)
	return number


def _optional_float(keyword: str) -> Callable[[str], Optional[float]]:
	def parse(value: str) -> Optional[float]:
		if value.lower() == keyword:
			return None
		return _parse_float(value)

	return parse


def _parse_int(value: str) -> int:
	try:
		return int(value)
	except ValueError:
		message = f"'{value}' is not an integer"
		raise ConfigurationError(message)


def _parse_bool(value: str) -> bool:
	lowered = value.lower()
	if lowered not in ("true", "false"):
		message = f"'{value}' is not `true` or `false`"
		raise ConfigurationError(message)
	return lowered == "true"


def _parse_optional_str(value: str) -> Optional[str]:
	return None if value.lower() == "none" else value


# Dotted key, field name, value parser. The order here is the order of the echoed document.
KEYS: List[Tuple[str, str, Callable[[str], Any]]] = [
	('oscillator.omega', 'omega', _parse_float),
	('oscillator.mass', 'mass', _parse_float),
	('bath.gamma', 'gamma', _parse_float),
	('bath.temperature_mK', 'temperature_mK', _parse_float),
	('measurement.eta', 'eta', _parse_float),
	('measurement.beta', 'beta', _parse_float),
	('measurement.photon_flux', 'photon_flux', _parse_float),
	('measurement.kappa_sq_avg', 'kappa_sq_avg', _optional_float('derived')),
	('pulse.mode', 'pulse_mode', str),
	('pulse.threshold', 'pulse_threshold', _parse_float),
	('pulse.phase', 'pulse_phase', _parse_float),
	('pulse.peak_policy', 'peak_policy', str),
	('pulse.kappa_sq_peak', 'kappa_sq_peak', _optional_float('none')),
	('pulse.warmup_periods', 'warmup_periods', _parse_float),
	('initial.policy', 'initial_policy', str),
	('initial.a11', 'initial_a11', _parse_float),
	('initial.a12', 'initial_a12', _parse_float),
	('initial.a21', 'initial_a21', _parse_float),
	('initial.a22', 'initial_a22', _parse_float),
	('run.duration', 'duration', _parse_float),
	('run.grid_dt', 'grid_dt', _optional_float('none')),
	('run.steps_per_period', 'steps_per_period', _parse_int),
	('run.preset', 'preset', _parse_optional_str),
	('output.folder', 'output_folder', str),
	('output.name', 'output_name', str),
	('output.plot', 'output_plot', _parse_bool),
]
FIELD_TO_KEY: Dict[str, str] = {field_name: key for key, field_name, _ in KEYS}
KEY_TO_FIELD: Dict[str, str] = {key: field_name for key, field_name, _ in KEYS}


def validate_config(config: RunConfig):
	""" Raises ConfigurationError naming the first key whose value is invalid. """
	if not config.temperature_mK >= 0:
		message = f"bath.temperature_mK must not be negative, got {config.temperature_mK}"
		raise ConfigurationError(message)
	try:
		derived = config.derived()
	except ConfigurationError as exception:
		# PhysicalParams names its own fields; report the document key instead.
		message = str(exception)
		for field_name, key in FIELD_TO_KEY.items():
			message = message.replace(f"PhysicalParams.{field_name} ", f"{key} ")
		raise ConfigurationError(message) from exception
	config.schedule(derived)

	if config.initial_policy not in INITIAL_POLICIES:
		message = f"initial.policy must be one of {INITIAL_POLICIES}, got '{config.initial_policy}'"
		raise ConfigurationError(message)
	if config.initial_policy == "explicit":
		if config.initial_a12 != config.initial_a21:
			message = f"initial.a12 and initial.a21 must be equal, got {config.initial_a12} and {config.initial_a21}"
			raise ConfigurationError(message)
		for key, value in (('initial.a11', config.initial_a11), ('initial.a22', config.initial_a22)):
			if value <= 0:
				message = f"{key} must be positive, got {value}"
				raise ConfigurationError(message)
	if config.duration <= 0:
		message = f"run.duration must be positive, got {config.duration}"
		raise ConfigurationError(message)
	if config.grid_dt is not None and not (0 < config.grid_dt <= config.duration):
		message = f"run.grid_dt must be positive and no longer than run.duration, got {config.grid_dt}"
		raise ConfigurationError(message)
	if config.steps_per_period < dynamics.MINIMUM_STEPS_PER_PERIOD:
		message = f"run.steps_per_period must be at least {dynamics.MINIMUM_STEPS_PER_PERIOD}, got {config.steps_per_period}"
		raise ConfigurationError(message)
	if not config.output_name:
		message = "output.name must not be empty"
		raise ConfigurationError(message)


def parse_config(text: str, defaults: Optional[RunConfig] = None) -> RunConfig:
	"""
		Parses a configuration document and returns the fully resolved configuration.
	Parameters
	----------
	text: str
	defaults: Optional[RunConfig]
		Values for keys absent from `text`. Presets are applied this way.
	"""
	if defaults is None:
		defaults = RunConfig()
	parsers = {key: parser for key, _, parser in KEYS}
	values: Dict[str, Any] = dict()
	seen: Dict[str, int] = dict()
	for line_number, line in enumerate(text.split('\n'), start = 1):
		line = line.strip()
		if not line or line.startswith('#'):
			continue
		if '=' not in line:
			message = f"Line {line_number}: expected `key = value`, got '{line}'"
			raise ConfigurationError(message)
		key, value = (i.strip() for i in line.split('=', 1))
		if key not in parsers:
			message = f"Line {line_number}: unknown key '{key}'"
			raise ConfigurationError(message)
		if key in seen:
			message = f"Line {line_number}: '{key}' was already set on line {seen[key]}"
			raise ConfigurationError(message)
		if not value:
			message = f"Line {line_number}: '{key}' has no value"
			raise ConfigurationError(message)
		try:
			values[KEY_TO_FIELD[key]] = parsers[key](value)
		except ConfigurationError as exception:
			message = f"Line {line_number}: {key}: {exception}"
			raise ConfigurationError(message) from exception
		seen[key] = line_number

	# A new frequency invalidates a grid that was resolved from the old one.
	if 'omega' in values and 'grid_dt' not in values and defaults.grid_dt is not None:
		values['grid_dt'] = None
	return replace(defaults, **values).resolve()


def load_config(path: Union[str, Path], defaults: Optional[RunConfig] = None) -> RunConfig:
	path = Path(path)
	try:
		text = path.read_text()
	except OSError as exception:
		message = f"Could not read the configuration file '{path}': {exception}"
		raise OSError(message) from exception
	return parse_config(text, defaults)


def _format_value(value: Any) -> str:
	if isinstance(value, str):
		return value
	return widgets.format_number(value)


def derived_values(config: RunConfig) -> Dict[str, float]:
	derived = config.derived()
	schedule = config.schedule(derived)
	return {
		'x0':            derived.x0,
		'p0':            derived.p0,
		'nbar':          derived.nbar,
		'capN':          derived.capN,
		'kappa_sq_avg':  derived.kappa_sq_avg,
		'kappa_sq_peak': schedule.kappa_sq_peak,
		'duty_cycle':    duty_cycle(schedule),
		'period':        derived.period
	}


def format_config(config: RunConfig) -> str:
	""" Writes every key, followed by the derived quantities as comments. parse_config(format_config(c)) == c. """
	lines = list()
	for key, field_name, _ in KEYS:
		value = getattr(config, field_name)
		if field_name == 'kappa_sq_avg' and value is None:
			text = "derived"
		else:
			text = _format_value(value)
		lines.append(f"{key} = {text}")
	lines.append("")
	for name, value in derived_values(config).items():
		lines.append(f"# derived.{name} = {widgets.format_number(value)}")
	return "\n".join(lines) + "\n"
