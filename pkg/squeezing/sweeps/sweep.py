import math
import multiprocessing
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import pandas
from loguru import logger
from tqdm import tqdm

from squeezing import simulation
from squeezing.dataio.configuration import RunConfig, format_config
from squeezing.oscillator.dynamics import DivergenceError
from squeezing.oscillator.parameters import ConfigurationError

# Axis name -> (RunConfig field, factor from the axis unit to the field unit). Temperatures are swept in kelvin.
AXES: Dict[str, Tuple[str, float]] = {
	'temperature':  ('temperature_mK', 1e3),
	'gamma':        ('gamma', 1.0),
	'kappa_sq_avg': ('kappa_sq_avg', 1.0),
	'threshold':    ('pulse_threshold', 1.0),
	'eta':          ('eta', 1.0)
}


def apply_axis(base: RunConfig, axis: str, value: float) -> RunConfig:
	""" Returns `base` with the parameter behind `axis` set to `value`, resolved and validated. """
	if axis not in AXES:
		message = f"Unknown sweep axis '{axis}'. Expected one of {list(AXES)}"
		raise ConfigurationError(message)
	if not math.isfinite(value):
		message = f"Sweep values must be finite, got {value} for '{axis}'"
		raise ConfigurationError(message)
	field_name, scale = AXES[axis]
	return replace(base, **{field_name: value * scale}).resolve()


@dataclass(frozen = True)
class SweepSpec:
	base: RunConfig
	axis: str
	values: Tuple[float, ...]

	def __post_init__(self):
		object.__setattr__(self, 'values', tuple(float(i) for i in self.values))
		if not self.values:
			message = "A sweep needs at least one value."
			raise ConfigurationError(message)
		for value in self.values:
			apply_axis(self.base, self.axis, value)

	def configs(self) -> List[RunConfig]:
		return [apply_axis(self.base, self.axis, value) for value in self.values]


@dataclass
class SweepRow:
	index: int
	axis: str
	value: float
	final_period_min_two_sigma: Optional[float] = None
	squeezed: Optional[bool] = None
	first_squeezing_time: Optional[float] = None
	global_min_two_sigma: Optional[float] = None
	det_end: Optional[float] = None
	error: Optional[str] = None
	# The resolved configuration of this point, so it can be re-run on its own.
	config_text: str = field(default = "", repr = False)


@dataclass
class SweepResult:
	axis: str
	rows: List[SweepRow]

	def to_table(self) -> pandas.DataFrame:
		records = [asdict(row) for row in self.rows]
		for record in records:
			record.pop('config_text')
		columns = [i for i in SweepRow.__dataclass_fields__ if i != 'config_text']
		return pandas.DataFrame(records, columns = columns)

	def to_dict(self) -> Dict[str, Any]:
		return {'axis': self.axis, 'rows': [asdict(row) for row in self.rows]}


def _evaluate_point(task: Tuple[int, str, float, RunConfig]) -> SweepRow:
	index, axis, value, config = task
	row = SweepRow(index = index, axis = axis, value = value, config_text = format_config(config))
	try:
		summary = simulation.evaluate(config)
	except (DivergenceError, ConfigurationError) as exception:
		row.error = str(exception)
		return row
	row.final_period_min_two_sigma = summary.final_period_min_two_sigma
	row.squeezed = summary.squeezed
	row.first_squeezing_time = summary.first_squeezing_time
	row.global_min_two_sigma = summary.global_min_two_sigma
	row.det_end = summary.det_end
	return row


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
	"""
		Runs one simulation per value of `spec.values`. Rows come back in input order whatever the number of workers.
		A point that diverges records the error in its row; the other points are unaffected.
	"""
	tasks = [(index, spec.axis, value, config) for index, (value, config) in enumerate(zip(spec.values, spec.configs()))]
	disable_progress = len(tasks) < 2
	logger.debug(f"Sweeping '{spec.axis}' over {len(tasks)} values with {workers} worker(s)...")
	if workers > 1 and len(tasks) > 1:
		with multiprocessing.Pool(processes = min(workers, len(tasks))) as pool:
			rows = list(tqdm(pool.imap(_evaluate_point, tasks), total = len(tasks), disable = disable_progress))
	else:
		rows = [_evaluate_point(task) for task in tqdm(tasks, disable = disable_progress)]

	for row in rows:
		if row.error:
			logger.warning(f"Sweep point {row.axis} = {row.value} failed: {row.error}")
		else:
			logger.debug(f"Sweep point {row.axis} = {row.value}: final-period minimum 2σ = {row.final_period_min_two_sigma:.6f}")
	return SweepResult(axis = spec.axis, rows = rows)
