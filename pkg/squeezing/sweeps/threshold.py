"""
	Locates the value of a parameter axis at which a run stops (or starts) being squeezed at its final period.
	The squeezed/not-squeezed predicate is assumed monotone along the axis; every search is checked against that
	assumption afterwards instead of trusting it.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import pandas
from loguru import logger
from scipy import optimize

from squeezing import simulation
from squeezing.analysis.metrics import SQUEEZING_THRESHOLD
from squeezing.dataio.configuration import RunConfig
from squeezing.sweeps.sweep import apply_axis

RELATIVE_TOLERANCE = 1e-3
# Offset of the certificate runs from the returned value, relative to the value.
CERTIFICATE_MARGIN = 0.1


class ThresholdSearchError(ValueError):
	""" Raised when the bracket is degenerate, does not bracket a change, or the predicate is not monotone. """


@dataclass
class ThresholdResult:
	axis: str
	value: float
	# The last bracket of the bisection, as (squeezed side, not squeezed side).
	bracket: Tuple[float, float]
	certified: bool
	certificate: Tuple[float, float]
	evaluations: pandas.DataFrame

	def to_dict(self) -> Dict[str, Any]:
		return {
			'axis':        self.axis,
			'value':       self.value,
			'bracket':     list(self.bracket),
			'certified':   self.certified,
			'certificate': list(self.certificate),
			'evaluations': self.evaluations.to_dict(orient = 'records')
		}


class _Objective:
	""" final-period minimum 2σ − √2 as a function of the axis value, with every evaluation recorded. """

	def __init__(self, base: RunConfig, axis: str):
		self.base = base
		self.axis = axis
		self.cache: Dict[float, float] = dict()
		self.records: List[Dict[str, Any]] = list()
		self.stage = "bracket"

	def evaluate(self, value: float) -> float:
		value = float(value)
		if value not in self.cache:
			summary = simulation.evaluate(apply_axis(self.base, self.axis, value))
			self.cache[value] = summary.final_period_min_two_sigma
			logger.debug(f"{self.axis} = {value!r}: final-period minimum 2σ = {summary.final_period_min_two_sigma:.6f}")
			self.records.append({
				'stage':                      self.stage,
				'value':                      value,
				'final_period_min_two_sigma': summary.final_period_min_two_sigma,
				'squeezed':                   summary.squeezed
			})
		return self.cache[value] - SQUEEZING_THRESHOLD

	__call__ = evaluate

	def squeezed(self, value: float) -> bool:
		return self.evaluate(value) < 0

	def table(self) -> pandas.DataFrame:
		return pandas.DataFrame(self.records, columns = ['stage', 'value', 'final_period_min_two_sigma', 'squeezed'])


def _count_switches(objective: _Objective) -> int:
	""" Number of times the predicate changes between neighbouring evaluated values. """
	points = sorted(objective.cache.items())
	flags = [minimum < SQUEEZING_THRESHOLD for _, minimum in points]
	return sum(1 for left, right in zip(flags, flags[1:]) if left != right)


def _final_bracket(objective: _Objective, squeezed_end: float, other_end: float) -> Tuple[float, float]:
	""" The evaluated values closest to the crossing on either side. """
	low, high = sorted((squeezed_end, other_end))
	points = [(value, minimum) for value, minimum in sorted(objective.cache.items()) if low <= value <= high]
	for (left, left_minimum), (right, right_minimum) in zip(points, points[1:]):
		if (left_minimum < SQUEEZING_THRESHOLD) != (right_minimum < SQUEEZING_THRESHOLD):
			if left_minimum < SQUEEZING_THRESHOLD:
				return left, right
			return right, left
	return squeezed_end, other_end


def find_threshold(base: RunConfig, axis: str, lo: float, hi: float, rtol: float = RELATIVE_TOLERANCE) -> ThresholdResult:
	"""
		Bisects the axis between `lo` and `hi` for the value at which the final-period minimum of 2σ crosses √2.
	Parameters
	----------
	base: RunConfig
	axis: str
		One of the sweep axes. Temperatures are given in kelvin.
	lo, hi: float
		The run must be squeezed at exactly one of the two ends.
	rtol: float
		Relative precision of the returned value.
	"""
	if lo == hi:
		message = f"The bracket is degenerate: lo = hi = {lo}"
		raise ThresholdSearchError(message)
	objective = _Objective(base, axis)
	squeezed_lo = objective.squeezed(lo)
	squeezed_hi = objective.squeezed(hi)
	if squeezed_lo == squeezed_hi:
		state = "squeezed" if squeezed_lo else "not squeezed"
		message = f"The run is {state} at both {axis} = {lo} and {axis} = {hi}, so the interval does not bracket a threshold"
		raise ThresholdSearchError(message)
	if objective(lo) == 0 or objective(hi) == 0:
		logger.warning("One end of the bracket sits exactly on the squeezing threshold.")

	squeezed_end, other_end = (lo, hi) if squeezed_lo else (hi, lo)
	objective.stage = "bisect"
	xtol = 1e-12 * max(abs(lo), abs(hi))
	value, information = optimize.bisect(objective, lo, hi, xtol = xtol, rtol = rtol, full_output = True, disp = False)
	logger.debug(f"Bisection finished after {information.iterations} iterations ({information.function_calls} evaluations).")

	switches = _count_switches(objective)
	if switches != 1:
		message = f"The squeezing predicate changes {switches} times along '{axis}' between {lo} and {hi}; it is not monotone"
		raise ThresholdSearchError(message)
	bracket = _final_bracket(objective, squeezed_end, other_end)

	# Re-check on both sides of the returned value, away from the bracket the bisection already used.
	low, high = sorted((lo, hi))
	offset = CERTIFICATE_MARGIN * (abs(value) if value != 0 else (high - low))
	direction = 1 if squeezed_end > other_end else -1
	squeezed_side = min(max(value + direction * offset, low), high)
	other_side = min(max(value - direction * offset, low), high)
	objective.stage = "certificate"
	certified = objective.squeezed(squeezed_side) and not objective.squeezed(other_side)
	if not certified or _count_switches(objective) != 1:
		message = (
			f"The certificate runs at {axis} = {squeezed_side} and {axis} = {other_side} disagree with the threshold "
			f"{value}; the predicate is not monotone along '{axis}'"
		)
		raise ThresholdSearchError(message)

	return ThresholdResult(
		axis = axis,
		value = float(value),
		bracket = bracket,
		certified = certified,
		certificate = (squeezed_side, other_side),
		evaluations = objective.table()
	)
