from pathlib import Path
from typing import Union

import pandas

from squeezing.dataio.generate_tables import TIMESERIES_COLUMNS


def read_timeseries(path: Union[str, Path]) -> pandas.DataFrame:
	""" Reads a file written by `write_timeseries`. Values are parsed with full round-trip precision. """
	path = Path(path)
	try:
		table = pandas.read_csv(path, float_precision = 'round_trip')
	except OSError as exception:
		message = f"Could not read '{path}': {exception}"
		raise OSError(message) from exception
	missing = [i for i in TIMESERIES_COLUMNS if i not in table.columns]
	if missing:
		message = f"'{path}' is not a time-series table; missing the columns {missing}"
		raise ValueError(message)
	return table
