import math
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas
from loguru import logger
from scipy import optimize

from squeezing import simulation
from squeezing.dataio.configuration import RunConfig
from squeezing.oscillator.parameters import ConfigurationError

# Relative tolerance of the golden-section refinement.
GOLDEN_TOLERANCE = 1e-3


@dataclass
class OptimizationResult:
	threshold: float
	phase: float
	objective: float
	grid_best: float
	# One row per grid point: threshold, phase, objective.
	grid: pandas.DataFrame
	# One row per refinement evaluation: coordinate, threshold, phase, objective.
	refinements: pandas.DataFrame

	def to_dict(self) -> Dict[str, Any]:
		return {
			'threshold':   self.threshold,
			'phase':       self.phase,
			'objective':   self.objective,
			'grid_best':   self.grid_best,
			'grid':        self.grid.to_dict(orient = 'records'),
			'refinements': self.refinements.to_dict(orient = 'records')
		}


class _PulseObjective:
	""" The final-period minimum of 2σ as a function of (threshold, phase). Repeated points are not re-simulated. """

	def __init__(self, base: RunConfig):
		self.base = base
		self.cache: Dict[Tuple[float, float], float] = dict()

	def __call__(self, threshold: float, phase: float) -> float:
		key = (float(threshold), float(phase))
		if key not in self.cache:
			config = replace(self.base, pulse_threshold = key[0], pulse_phase = key[1])
			self.cache[key] = simulation.evaluate(config).final_period_min_two_sigma
			logger.debug(f"threshold = {key[0]!r}, phase = {key[1]!r}: final-period minimum 2σ = {self.cache[key]:.6f}")
		return self.cache[key]


def _validate_grid(thresholds: Sequence[float], phases: Sequence[float]):
	if not thresholds or not phases:
		message = "The search space needs at least one threshold and one phase."
		raise ConfigurationError(message)
	for threshold in thresholds:
		if not (0 < threshold < 1):
			message = f"pulse.threshold must lie strictly between 0 and 1, got {threshold}"
			raise ConfigurationError(message)
	for phase in phases:
		if not math.isfinite(phase):
			message = f"pulse.phase must be finite, got {phase}"
			raise ConfigurationError(message)


def _refine(function: Callable[[float], float], grid: List[float], best: float, best_value: float) -> Optional[Tuple[float, float]]:
	"""
		Golden-section search between the grid neighbours of `best`. Only runs when `best` is an interior grid point
		that is strictly lower than both neighbours, since otherwise the neighbours do not bracket a minimum.
		Returns the refined (argument, value) when it improves on `best_value`.
	"""
	points = sorted(set(grid))
	position = points.index(best)
	if position == 0 or position == len(points) - 1:
		return None
	left, right = points[position - 1], points[position + 1]
	if not (best_value < function(left) and best_value < function(right)):
		return None
	result = optimize.minimize_scalar(
		function,
		bracket = (left, best, right),
		method = 'golden',
		options = {'xtol': GOLDEN_TOLERANCE}
	)
	if result.fun < best_value:
		return float(result.x), float(result.fun)
	return None


def optimize_pulse(base: RunConfig, thresholds: Sequence[float], phases: Sequence[float]) -> OptimizationResult:
	"""
		Searches the gating threshold and phase for the smallest final-period minimum of 2σ. Every grid point is
		evaluated, then each coordinate of the best point is refined by golden-section search with the other held
		fixed. The result is the best point found, which is never worse than the best grid point.
	Parameters
	----------
	base: RunConfig
	thresholds: Sequence[float]
		Grid of gating thresholds, each in (0, 1).
	phases: Sequence[float]
		Grid of gating phases, in radians.
	"""
	thresholds = [float(i) for i in thresholds]
	phases = [float(i) for i in phases]
	_validate_grid(thresholds, phases)
	objective = _PulseObjective(base)

	grid_records = list()
	for threshold in thresholds:
		for phase in phases:
			grid_records.append({'threshold': threshold, 'phase': phase, 'objective': objective(threshold, phase)})
	grid = pandas.DataFrame(grid_records, columns = ['threshold', 'phase', 'objective'])
	best_row = grid.loc[grid['objective'].idxmin()]
	best_threshold, best_phase, best_value = float(best_row['threshold']), float(best_row['phase']), float(best_row['objective'])
	grid_best = best_value
	logger.info(f"Best grid point: threshold = {best_threshold}, phase = {best_phase}, 2σ = {best_value:.6f}")

	refinement_records = list()

	def along_threshold(value: float) -> float:
		result = objective(value, best_phase)
		refinement_records.append({'coordinate': 'threshold', 'threshold': float(value), 'phase': best_phase, 'objective': result})
		return result

	refined = _refine(along_threshold, thresholds, best_threshold, best_value)
	if refined:
		best_threshold, best_value = refined

	def along_phase(value: float) -> float:
		result = objective(best_threshold, value)
		refinement_records.append({'coordinate': 'phase', 'threshold': best_threshold, 'phase': float(value), 'objective': result})
		return result

	refined = _refine(along_phase, phases, best_phase, best_value)
	if refined:
		best_phase, best_value = refined

	if best_value > grid_best:
		message = f"The refined objective {best_value} is worse than the best grid point {grid_best}"
		raise ArithmeticError(message)

	return OptimizationResult(
		threshold = best_threshold,
		phase = best_phase,
		objective = best_value,
		grid_best = grid_best,
		grid = grid,
		refinements = pandas.DataFrame(refinement_records, columns = ['coordinate', 'threshold', 'phase', 'objective'])
	)
