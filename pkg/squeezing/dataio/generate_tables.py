from pathlib import Path
from typing import Union

import pandas

from squeezing.analysis import metrics
from squeezing.oscillator.dynamics import Trajectory

TIMESERIES_COLUMNS = ['t_s', 'a11', 'a12', 'a21', 'a22', 'two_sigma_x', 'two_sigma_p', 'det', 'kappa_sq']
# 17 significant digits, so every float survives a round trip through the file.
FLOAT_FORMAT = "%.16e"


def write_table(table: pandas.DataFrame, path: Union[str, Path]) -> Path:
	""" Writes `table` as a comma-separated file with a fixed float format and '\n' line endings. """
	path = Path(path)
	try:
		table.to_csv(path, index = False, float_format = FLOAT_FORMAT, lineterminator = "\n")
	except OSError as exception:
		message = f"Could not write '{path}': {exception}"
		raise OSError(message) from exception
	return path


def generate_timeseries_table(trajectory: Trajectory) -> pandas.DataFrame:
	""" The trajectory plus the 2σ columns and the uncertainty product, in the documented column order. """
	table = metrics.squeezing_table(trajectory)
	return table[TIMESERIES_COLUMNS]


def write_timeseries(trajectory: Trajectory, path: Union[str, Path]) -> Path:
	if len(trajectory) == 0:
		message = "Cannot write an empty trajectory."
		raise ValueError(message)
	return write_table(generate_timeseries_table(trajectory), path)
