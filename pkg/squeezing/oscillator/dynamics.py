"""
	Integrates the conditional covariance equations of a measured, damped harmonic oscillator:

		da11/dt = -ηκ² a11² + ω(a21 + a12) - γ(a11 - N)
		da12/dt = -ηκ² a11 a12 - ω(a11 - a22) - γ a12
		da21/dt = -ηκ² a11 a21 - ω(a11 - a22) - γ a21
		da22/dt = κ² - ηκ² a12 a21 - ω(a21 + a12) - γ(a22 - N)

	where a11 = 2·Var(X), a22 = 2·Var(P) and a12, a21 are twice the covariances.
"""
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy
import pandas
from loguru import logger

from squeezing.oscillator.parameters import DerivedParams, PhysicalParams
from squeezing.oscillator.schedule import PulseSchedule, kappa_sq_at, pulse_edges

DIVERGENCE_LIMIT = 1e12
UNCERTAINTY_TOLERANCE = 1e-3
MINIMUM_STEPS_PER_PERIOD = 100

Derivatives = Tuple[float, float, float, float]


class DivergenceError(ArithmeticError):
	""" Raised when a covariance diagonal grows past `DIVERGENCE_LIMIT`, stops being positive, or stops being finite. """

	def __init__(self, message: str, t: float, mode: Optional[str] = None):
		self.message = message
		self.t = t
		self.mode = mode
		if mode:
			message = f"[{mode} mode] {message}"
		super().__init__(message)

	def __reduce__(self):
		# Needed to survive the trip back from a worker process.
		return self.__class__, (self.message, self.t, self.mode)


@dataclass(frozen = True)
class CovarianceState:
	t: float
	a11: float
	a12: float
	a21: float
	a22: float

	@property
	def det(self) -> float:
		""" The uncertainty product a11·a22 − a12·a21, equal to 1 for a pure state. """
		return self.a11 * self.a22 - self.a12 * self.a21

	def values(self) -> Derivatives:
		return self.a11, self.a12, self.a21, self.a22


def thermal_state(capN: float, t: float = 0.0) -> CovarianceState:
	""" Equilibrium with the bath: a11 = a22 = N = 2n̄+1 and no correlations. """
	return CovarianceState(t = t, a11 = capN, a12 = 0.0, a21 = 0.0, a22 = capN)


def ground_state(t: float = 0.0) -> CovarianceState:
	return thermal_state(1.0, t)


def rotate_quadratures(state: CovarianceState) -> CovarianceState:
	""" Expresses the state in the frame X' = P, P' = −X. The equations of motion keep their form in this frame,
		so measuring X' is a momentum measurement.
	"""
	return CovarianceState(t = state.t, a11 = state.a22, a12 = -state.a12, a21 = -state.a21, a22 = state.a11)


def _derivatives(a11: float, a12: float, a21: float, a22: float, kappa_sq: float, omega: float, gamma: float, eta: float,
		capN: float) -> Derivatives:
	measurement = eta * kappa_sq
	rotation = omega * (a21 + a12)
	exchange = omega * (a11 - a22)
	return (
		-measurement * a11 * a11 + rotation - gamma * (a11 - capN),
		-measurement * a11 * a12 - exchange - gamma * a12,
		-measurement * a11 * a21 - exchange - gamma * a21,
		kappa_sq - measurement * a12 * a21 - rotation - gamma * (a22 - capN)
	)


def rhs(state: CovarianceState, kappa_sq: float, omega: float, gamma: float, eta: float, capN: float) -> Derivatives:
	""" Time derivatives (da11, da12, da21, da22)/dt for a constant measurement strength `kappa_sq`. """
	return _derivatives(state.a11, state.a12, state.a21, state.a22, kappa_sq, omega, gamma, eta, capN)


def _rk4_step(y: Derivatives, dt: float, kappa_sq: float, omega: float, gamma: float, eta: float, capN: float) -> Derivatives:
	a11, a12, a21, a22 = y
	half = dt / 2
	k1 = _derivatives(a11, a12, a21, a22, kappa_sq, omega, gamma, eta, capN)
	k2 = _derivatives(
		a11 + half * k1[0], a12 + half * k1[1], a21 + half * k1[2], a22 + half * k1[3],
		kappa_sq, omega, gamma, eta, capN
	)
	k3 = _derivatives(
		a11 + half * k2[0], a12 + half * k2[1], a21 + half * k2[2], a22 + half * k2[3],
		kappa_sq, omega, gamma, eta, capN
	)
	k4 = _derivatives(
		a11 + dt * k3[0], a12 + dt * k3[1], a21 + dt * k3[2], a22 + dt * k3[3],
		kappa_sq, omega, gamma, eta, capN
	)
	sixth = dt / 6
	return (
		a11 + sixth * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
		a12 + sixth * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
		a21 + sixth * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]),
		a22 + sixth * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3])
	)


def _advance(y: Derivatives, duration: float, steps: int, kappa_sq: float, omega: float, gamma: float, eta: float,
		capN: float) -> Derivatives:
	dt = duration / steps
	for _ in range(steps):
		y = _rk4_step(y, dt, kappa_sq, omega, gamma, eta, capN)
	return y


def propagate(state: CovarianceState, duration: float, steps: int, kappa_sq: float, omega: float, gamma: float, eta: float,
		capN: float) -> CovarianceState:
	""" `steps` equal RK4 steps at constant κ². There is no schedule and the rates are not validated, so limits such as
		ω = 0 can be integrated directly.
	"""
	if steps < 1:
		message = f"At least one step is required, got {steps}"
		raise ValueError(message)
	a11, a12, a21, a22 = _advance(state.values(), duration, steps, kappa_sq, omega, gamma, eta, capN)
	return CovarianceState(t = state.t + duration, a11 = a11, a12 = a12, a21 = a21, a22 = a22)


@dataclass(frozen = True)
class TrajectoryParameters:
	""" Everything needed to re-run a trajectory. """
	physical: PhysicalParams
	derived: DerivedParams
	schedule: PulseSchedule
	steps_per_period: int


@dataclass
class Trajectory:
	"""
		Covariance samples on a uniform output grid.
		`table` has the columns `t_s`, `a11`, `a12`, `a21`, `a22`, `kappa_sq`, one row per sample,
		where `kappa_sq` is κ²(t) at the sample time.
	"""
	table: pandas.DataFrame
	grid_dt: float
	params_snapshot: TrajectoryParameters

	def __len__(self) -> int:
		return len(self.table)

	@property
	def times(self) -> pandas.Series:
		return self.table['t_s']

	def state(self, index: int) -> CovarianceState:
		row = self.table.iloc[index]
		return CovarianceState(t = row['t_s'], a11 = row['a11'], a12 = row['a12'], a21 = row['a21'], a22 = row['a22'])

	@property
	def initial(self) -> CovarianceState:
		return self.state(0)

	@property
	def final(self) -> CovarianceState:
		return self.state(len(self) - 1)

	def states(self) -> Iterator[CovarianceState]:
		for t, a11, a12, a21, a22 in self.table[['t_s', 'a11', 'a12', 'a21', 'a22']].itertuples(index = False):
			yield CovarianceState(t = t, a11 = a11, a12 = a12, a21 = a21, a22 = a22)


def output_grid(duration: float, grid_dt: float) -> numpy.ndarray:
	""" Sample times i·grid_dt for every i with i·grid_dt <= duration (up to rounding). Computed by multiplication, not
		accumulation, so long runs do not drift.
	"""
	total = int(math.floor(duration / grid_dt + 1e-9))
	return numpy.arange(total + 1) * grid_dt


def _check_state(y: Derivatives, t: float, label: Optional[str]):
	a11, _, _, a22 = y
	if not all(math.isfinite(i) for i in y):
		message = f"The covariance became non-finite at t = {t:.6e} s: {y}"
		raise DivergenceError(message, t, label)
	if abs(a11) > DIVERGENCE_LIMIT or abs(a22) > DIVERGENCE_LIMIT:
		message = f"The covariance diverged past {DIVERGENCE_LIMIT:.0e} at t = {t:.6e} s (a11 = {a11:.3e}, a22 = {a22:.3e})"
		raise DivergenceError(message, t, label)
	if a11 <= 0 or a22 <= 0:
		message = f"The covariance diverged to a non-positive variance at t = {t:.6e} s (a11 = {a11:.3e}, a22 = {a22:.3e}). Reduce the step size."
		raise DivergenceError(message, t, label)


def integrate(initial: CovarianceState, schedule: PulseSchedule, physical: PhysicalParams, derived: DerivedParams,
		duration: float, grid_dt: float, steps_per_period: int = 1000, label: Optional[str] = None) -> Trajectory:
	"""
		Classical fixed-step RK4. The base step is period/steps_per_period. Every pulse edge and every output time is a
		breakpoint, and each interval between breakpoints is split into equal steps no longer than the base step, so no
		step straddles a discontinuity of κ² and each sample is integrated to exactly.
	Parameters
	----------
	initial: CovarianceState
		Must be given at t = 0.
	schedule: PulseSchedule
	physical: PhysicalParams
	derived: DerivedParams
	duration, grid_dt: float
		In seconds.
	steps_per_period: int
	label: Optional[str]
		Attached to divergence errors. Used by the two-mode simulation.
	"""
	if duration <= 0 or grid_dt <= 0:
		message = f"Both the duration and the output interval must be positive, got duration = {duration}, grid_dt = {grid_dt}"
		raise ValueError(message)
	if grid_dt > duration:
		message = f"The output interval ({grid_dt} s) is longer than the duration ({duration} s)"
		raise ValueError(message)
	if steps_per_period < MINIMUM_STEPS_PER_PERIOD:
		message = f"steps_per_period must be at least {MINIMUM_STEPS_PER_PERIOD}, got {steps_per_period}"
		raise ValueError(message)
	if initial.t != 0:
		message = f"The initial state must be given at t = 0, got t = {initial.t}"
		raise ValueError(message)

	omega, gamma, eta, capN = physical.omega, physical.gamma, physical.eta, derived.capN
	base_step = derived.period / steps_per_period
	times = output_grid(duration, grid_dt)
	edges = pulse_edges(schedule, omega, 0.0, float(times[-1])) if len(times) > 1 else []
	# Breakpoints closer than this to the current time are treated as already reached.
	resolution = base_step * 1e-9

	y = initial.values()
	if initial.det < 1 - UNCERTAINTY_TOLERANCE:
		logger.warning(f"The initial state violates the uncertainty relation (det = {initial.det:.6f}).")
		warned = True
	else:
		warned = False

	columns: List[List[float]] = [[0.0], [y[0]], [y[1]], [y[2]], [y[3]], [kappa_sq_at(schedule, omega, 0.0)]]
	t = 0.0
	edge_index = 0
	logger.debug(f"Integrating {len(times) - 1} output intervals across {len(edges)} pulse edges (step {base_step:.3e} s)...")
	for target in times[1:]:
		target = float(target)
		while t < target - resolution:
			while edge_index < len(edges) and edges[edge_index] <= t + resolution:
				edge_index += 1
			if edge_index < len(edges) and edges[edge_index] < target - resolution:
				stop = edges[edge_index]
			else:
				stop = target
			# κ² is constant on (t, stop), so sample it in the middle of the interval.
			kappa_sq = kappa_sq_at(schedule, omega, 0.5 * (t + stop))
			steps = max(1, math.ceil((stop - t) / base_step - 1e-9))
			y = _advance(y, stop - t, steps, kappa_sq, omega, gamma, eta, capN)
			t = stop
			_check_state(y, t, label)
		t = target

		if not warned and y[0] * y[3] - y[1] * y[2] < 1 - UNCERTAINTY_TOLERANCE:
			logger.warning(
				f"The uncertainty product fell to {y[0] * y[3] - y[1] * y[2]:.6f} at t = {t:.6e} s. Check the step size."
			)
			warned = True

		columns[0].append(target)
		for column, value in zip(columns[1:5], y):
			column.append(value)
		columns[5].append(kappa_sq_at(schedule, omega, target))

	table = pandas.DataFrame(
		{
			't_s':      columns[0],
			'a11':      columns[1],
			'a12':      columns[2],
			'a21':      columns[3],
			'a22':      columns[4],
			'kappa_sq': columns[5]
		}
	)
	snapshot = TrajectoryParameters(physical = physical, derived = derived, schedule = schedule, steps_per_period = steps_per_period)
	return Trajectory(table = table, grid_dt = grid_dt, params_snapshot = snapshot)
