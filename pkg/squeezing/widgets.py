import csv
import math
from pathlib import Path
from typing import *

import pandas


def _coerce_to_series(item: Any) -> pandas.Series:
	if not isinstance(item, pandas.Series):
		item = pandas.Series(item)
	return item


def checkdir(path: Union[str, Path]) -> Path:
	path = Path(path)
	if not path.exists():
		path.mkdir(parents = True)
	return path


def mechanical_period(omega: float) -> float:
	""" Period of the mechanical mode, in seconds, for an angular frequency in rad/s. """
	if omega <= 0:
		message = f"The angular frequency must be positive, got {omega}"
		raise ValueError(message)
	return 2 * math.pi / omega


def format_number(value: Optional[float]) -> str:
	""" Formats a number so that float(format_number(x)) == x. `None` is written as `none`. """
	if value is None:
		return "none"
	if isinstance(value, bool):
		return "true" if value else "false"
	if isinstance(value, int):
		return str(value)
	return repr(float(value))


def get_first_timepoint_below(series: pandas.Series, cutoff: float) -> Optional[float]:
	""" Returns the first index whose value is strictly below `cutoff`, or `None` if no value is. """
	series = _coerce_to_series(series)
	below = series < cutoff
	if below.sum() == 0:
		return None
	return below.idxmax()


def _get_git_log() -> str:
	filename = Path(__file__).parent.parent / ".git" / "logs" / "HEAD"
	try:
		contents = filename.read_text()
	except FileNotFoundError:
		contents = ""
	return contents


def get_commit_hash() -> str:
	commit_hash = "n/a"
	contents = _get_git_log()
	if contents:
		contents = contents.split('\n')
		contents = [i.strip() for i in contents if i.strip()]
		reader = csv.reader(contents, delimiter = '\t')
		for line in reader:
			if line:
				hash_string = line[0]
				try:
					commit_hash = hash_string.split()[1]
				except IndexError:
					continue
		commit_hash = commit_hash[:7]
	else:
		commit_hash = "not available"
	return commit_hash
