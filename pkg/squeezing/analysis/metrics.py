"""
	Squeezing diagnostics. Every quadrature is reported as 2σ = √(2·a_ii); a quadrature is squeezed when 2σ < √2 (displayed as 1.41).
"""
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Tuple

import numpy
import pandas

from squeezing import widgets
from squeezing.oscillator.dynamics import CovarianceState, Trajectory
from squeezing.oscillator.schedule import duty_cycle, effective_rate

SQUEEZING_THRESHOLD = math.sqrt(2)
SQUEEZING_THRESHOLD_LABEL = "1.41"
DUAN_THRESHOLD = 1.0
# Relative slack used when assigning samples that sit on a period boundary.
PERIOD_TOLERANCE = 1e-9
MINIMUM_SAMPLES_PER_PERIOD = 50


class InsufficientDataError(ValueError):
	""" Raised when a trajectory is too short or too coarse for the requested diagnostic. """


@dataclass(frozen = True)
class SqueezingReport:
	two_sigma_x: float
	two_sigma_p: float
	min_two_sigma: float
	det: float
	squeezed: bool


@dataclass
class Envelope:
	"""
		Per-period extrema of 2σ(X) and 2σ(P). `table` has the columns `period`, `t_start`, `t_end`, `complete`,
		`two_sigma_x_min`, `two_sigma_x_max`, `two_sigma_p_min`, `two_sigma_p_max`.
	"""
	table: pandas.DataFrame
	global_min: float
	global_min_time: float


def report(state: CovarianceState) -> SqueezingReport:
	two_sigma_x = math.sqrt(2 * state.a11)
	two_sigma_p = math.sqrt(2 * state.a22)
	minimum = min(two_sigma_x, two_sigma_p)
	return SqueezingReport(
		two_sigma_x = two_sigma_x,
		two_sigma_p = two_sigma_p,
		min_two_sigma = minimum,
		det = state.det,
		squeezed = minimum < SQUEEZING_THRESHOLD
	)


def squeezing_table(trajectory: Trajectory) -> pandas.DataFrame:
	""" Adds the columns `two_sigma_x`, `two_sigma_p`, `min_two_sigma` and `det` to a copy of the trajectory table. """
	table = trajectory.table.copy()
	table['two_sigma_x'] = numpy.sqrt(2 * table['a11'])
	table['two_sigma_p'] = numpy.sqrt(2 * table['a22'])
	table['min_two_sigma'] = numpy.minimum(table['two_sigma_x'], table['two_sigma_p'])
	table['det'] = table['a11'] * table['a22'] - table['a12'] * table['a21']
	return table


def _period_index(times: pandas.Series, period: float) -> numpy.ndarray:
	# Samples on a boundary belong to the period that ends there; t = 0 belongs to period 0.
	index = numpy.ceil(times.to_numpy() / period - PERIOD_TOLERANCE) - 1
	return numpy.maximum(index, 0).astype(int)


def envelope(trajectory: Trajectory, omega: float) -> Envelope:
	period = widgets.mechanical_period(omega)
	t_end = float(trajectory.times.iloc[-1])
	if t_end < period * (1 - PERIOD_TOLERANCE):
		message = f"The trajectory spans {t_end:.3e} s, shorter than one mechanical period ({period:.3e} s)"
		raise InsufficientDataError(message)
	if trajectory.grid_dt > period / MINIMUM_SAMPLES_PER_PERIOD * (1 + PERIOD_TOLERANCE):
		message = f"The output interval {trajectory.grid_dt:.3e} s resolves fewer than {MINIMUM_SAMPLES_PER_PERIOD} samples per period"
		raise InsufficientDataError(message)

	table = squeezing_table(trajectory)
	table['period'] = _period_index(table['t_s'], period)
	groups = table.groupby('period')
	records = pandas.DataFrame(
		{
			'two_sigma_x_min': groups['two_sigma_x'].min(),
			'two_sigma_x_max': groups['two_sigma_x'].max(),
			'two_sigma_p_min': groups['two_sigma_p'].min(),
			'two_sigma_p_max': groups['two_sigma_p'].max(),
		}
	).reset_index()
	records.insert(1, 't_start', records['period'] * period)
	records.insert(2, 't_end', (records['period'] + 1) * period)
	records.insert(3, 'complete', records['t_end'] <= t_end * (1 + PERIOD_TOLERANCE))

	position = int(table['min_two_sigma'].to_numpy().argmin())
	return Envelope(
		table = records,
		global_min = float(table['min_two_sigma'].iloc[position]),
		global_min_time = float(table['t_s'].iloc[position])
	)


def final_period_minimum(trajectory: Trajectory, omega: float) -> float:
	""" The smallest 2σ of either quadrature during the last mechanical period of the run. This is how a value
		"at 400 μs" is read off the oscillating curves.
	"""
	period = widgets.mechanical_period(omega)
	table = squeezing_table(trajectory)
	t_end = table['t_s'].iloc[-1]
	window = table[table['t_s'] >= t_end - period * (1 + PERIOD_TOLERANCE)]
	return float(window['min_two_sigma'].min())


def first_squeezing_time(trajectory: Trajectory) -> Optional[float]:
	table = squeezing_table(trajectory)
	series = pandas.Series(table['min_two_sigma'].values, index = table['t_s'].values)
	result = widgets.get_first_timepoint_below(series, SQUEEZING_THRESHOLD)
	return None if result is None else float(result)


def duan_sum(var_x_plus: float, var_p_minus: float) -> Tuple[float, bool]:
	""" Var(X+) + Var(P-) and whether it certifies entanglement (strictly below 1). """
	if var_x_plus < 0 or var_p_minus < 0:
		message = f"Variances must not be negative, got Var(X+) = {var_x_plus}, Var(P-) = {var_p_minus}"
		raise ValueError(message)
	total = var_x_plus + var_p_minus
	return total, total < DUAN_THRESHOLD


@dataclass(frozen = True)
class SimulationSummary:
	final_period_min_two_sigma: float
	squeezed: bool
	first_squeezing_time: Optional[float]
	global_min_two_sigma: float
	global_min_time: float
	det_end: float
	duration: float
	samples: int
	nbar: float
	capN: float
	kappa_sq_avg: float
	kappa_sq_formula: float
	kappa_sq_peak: float
	effective_rate: float
	duty_cycle: float

	def to_dict(self) -> Dict[str, Any]:
		return asdict(self)


def summarize(trajectory: Trajectory, omega: float) -> SimulationSummary:
	table = squeezing_table(trajectory)
	snapshot = trajectory.params_snapshot
	final_minimum = final_period_minimum(trajectory, omega)
	position = int(table['min_two_sigma'].to_numpy().argmin())
	return SimulationSummary(
		final_period_min_two_sigma = final_minimum,
		squeezed = final_minimum < SQUEEZING_THRESHOLD,
		first_squeezing_time = first_squeezing_time(trajectory),
		global_min_two_sigma = float(table['min_two_sigma'].iloc[position]),
		global_min_time = float(table['t_s'].iloc[position]),
		det_end = float(table['det'].iloc[-1]),
		duration = float(table['t_s'].iloc[-1]),
		samples = len(table),
		nbar = snapshot.derived.nbar,
		capN = snapshot.derived.capN,
		kappa_sq_avg = snapshot.derived.kappa_sq_avg,
		kappa_sq_formula = snapshot.derived.kappa_sq_formula,
		kappa_sq_peak = snapshot.schedule.kappa_sq_peak,
		effective_rate = effective_rate(snapshot.schedule),
		duty_cycle = duty_cycle(snapshot.schedule)
	)
