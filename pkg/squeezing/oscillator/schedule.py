"""
	Time dependence of the measurement strength κ²(t).

	In stroboscopic mode the probe is on while |cos(ωt − phase)| > threshold, which opens two identical
	windows per mechanical period, centred on ωt − phase ≡ 0 (mod π). Nothing is applied before `warmup`.
"""
import math
from dataclasses import dataclass, replace
from typing import List, Optional

from squeezing import widgets
from squeezing.oscillator.parameters import ConfigurationError

MODES = ["continuous", "stroboscopic", "off"]
PEAK_POLICIES = ["ten_times_avg", "avg_over_duty", "explicit"]


@dataclass(frozen = True)
class PulseSchedule:
	mode: str = "stroboscopic"
	threshold: float = 0.9
	phase: float = 0.0
	kappa_sq_peak: float = 0.0  # 1/s
	warmup: float = 0.0  # s

	def __post_init__(self):
		if self.mode not in MODES:
			message = f"pulse.mode must be one of {MODES}, got '{self.mode}'"
			raise ConfigurationError(message)
		if not (0 < self.threshold < 1):
			message = f"pulse.threshold must lie strictly between 0 and 1, got {self.threshold}"
			raise ConfigurationError(message)
		if not math.isfinite(self.phase):
			message = f"pulse.phase must be finite, got {self.phase}"
			raise ConfigurationError(message)
		if not (math.isfinite(self.kappa_sq_peak) and self.kappa_sq_peak >= 0):
			message = f"pulse.kappa_sq_peak must be a non-negative number, got {self.kappa_sq_peak}"
			raise ConfigurationError(message)
		if not (math.isfinite(self.warmup) and self.warmup >= 0):
			message = f"pulse.warmup must be a non-negative number, got {self.warmup}"
			raise ConfigurationError(message)

	@property
	def half_width(self) -> float:
		""" Half the angular width of each pulse, acos(threshold). """
		return math.acos(self.threshold)


def _stroboscopic_duty(threshold: float) -> float:
	return 2 * math.acos(threshold) / math.pi


def duty_cycle(schedule: PulseSchedule) -> float:
	""" Fraction of each mechanical period during which κ² > 0 (ignoring the warm-up). """
	if schedule.mode == "continuous":
		return 1.0
	if schedule.mode == "off":
		return 0.0
	return _stroboscopic_duty(schedule.threshold)


def effective_rate(schedule: PulseSchedule) -> float:
	""" The orbit-averaged measurement strength the schedule actually applies. """
	return schedule.kappa_sq_peak * duty_cycle(schedule)


def kappa_sq_at(schedule: PulseSchedule, omega: float, t: float) -> float:
	if schedule.mode == "off" or t < schedule.warmup:
		return 0.0
	if schedule.mode == "continuous":
		return schedule.kappa_sq_peak
	if abs(math.cos(omega * t - schedule.phase)) > schedule.threshold:
		return schedule.kappa_sq_peak
	return 0.0


def pulse_edges(schedule: PulseSchedule, omega: float, t0: float, t1: float) -> List[float]:
	"""
		Returns every time in the open interval (t0, t1) at which κ²(t) switches, in increasing order.
		Pulse `k` covers ωt − phase ∈ (kπ − a, kπ + a) with a = acos(threshold), so the edges follow in closed form.
	"""
	if not t0 < t1:
		message = f"The window must satisfy t0 < t1, got ({t0}, {t1})"
		raise ValueError(message)
	if schedule.mode == "off":
		return []

	edges = list()
	if t0 < schedule.warmup < t1:
		edges.append(schedule.warmup)
	if schedule.mode == "continuous":
		return edges

	start = max(t0, schedule.warmup)
	if start >= t1:
		return edges
	half_width = schedule.half_width
	first = math.floor((omega * start - schedule.phase - half_width) / math.pi)
	last = math.ceil((omega * t1 - schedule.phase + half_width) / math.pi)
	for k in range(first, last + 1):
		centre = schedule.phase + k * math.pi
		for angle in (centre - half_width, centre + half_width):
			t = angle / omega
			if start < t < t1:
				edges.append(t)
	return sorted(set(edges))


def shifted(schedule: PulseSchedule, phase_offset: float) -> PulseSchedule:
	""" A copy of `schedule` with the gating phase advanced by `phase_offset` radians. """
	return replace(schedule, phase = schedule.phase + phase_offset)


def build_schedule(mode: str, threshold: float, phase: float, peak_policy: str, kappa_sq_avg: float,
		kappa_sq_peak: Optional[float] = None, warmup_periods: float = 0.0, omega: float = 2 * math.pi * 1e6) -> PulseSchedule:
	"""
		Resolves the pulse amplitude policy into a concrete schedule.
	Parameters
	----------
	mode: str
	threshold, phase: float
	peak_policy: Literal['ten_times_avg', 'avg_over_duty', 'explicit']
		`ten_times_avg` uses 10·κ²_avg during a pulse. `avg_over_duty` keeps the orbit average equal to κ²_avg.
		`explicit` uses `kappa_sq_peak` as given.
	kappa_sq_avg: float
	kappa_sq_peak: Optional[float]
		Only used with the `explicit` policy.
	warmup_periods: float
		Delay before the first pulse, in mechanical periods.
	omega: float
	"""
	if peak_policy not in PEAK_POLICIES:
		message = f"pulse.peak_policy must be one of {PEAK_POLICIES}, got '{peak_policy}'"
		raise ConfigurationError(message)
	if not (math.isfinite(warmup_periods) and warmup_periods >= 0):
		message = f"pulse.warmup_periods must be a non-negative number, got {warmup_periods}"
		raise ConfigurationError(message)

	if peak_policy == "explicit":
		if kappa_sq_peak is None:
			message = "pulse.kappa_sq_peak is required when pulse.peak_policy = explicit"
			raise ConfigurationError(message)
		peak = kappa_sq_peak
	elif peak_policy == "ten_times_avg":
		peak = 10 * kappa_sq_avg
	elif mode == "stroboscopic":
		if not (0 < threshold < 1):
			message = f"pulse.threshold must lie strictly between 0 and 1, got {threshold}"
			raise ConfigurationError(message)
		peak = kappa_sq_avg / _stroboscopic_duty(threshold)
	else:
		# A continuous probe has duty 1; the `off` mode never applies the amplitude.
		peak = kappa_sq_avg

	return PulseSchedule(
		mode = mode,
		threshold = threshold,
		phase = phase,
		kappa_sq_peak = peak,
		warmup = warmup_periods * widgets.mechanical_period(omega)
	)
