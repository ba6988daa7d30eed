import math
from unittest.mock import patch

import pandas
import pytest

from squeezing import widgets


def test_checkdir(tmp_path):
	folder = tmp_path / "a" / "b"
	result = widgets.checkdir(folder)
	assert result == folder
	assert folder.is_dir()
	# Calling it again on an existing folder is fine.
	assert widgets.checkdir(str(folder)) == folder


def test_mechanical_period():
	assert widgets.mechanical_period(2 * math.pi * 1e6) == pytest.approx(1e-6)
	with pytest.raises(ValueError):
		widgets.mechanical_period(0.0)


@pytest.mark.parametrize(
	"value, expected",
	[
		(None, "none"),
		(True, "true"),
		(False, "false"),
		(1000, "1000"),
		(0.1, "0.1"),
		(2 * math.pi * 197, repr(2 * math.pi * 197)),
	]
)
def test_format_number(value, expected):
	assert widgets.format_number(value) == expected


def test_format_number_round_trips():
	value = 1 / 3
	assert float(widgets.format_number(value)) == value


@pytest.mark.parametrize(
	"values, expected",
	[
		([2.0, 1.5, 1.2, 1.0], 0.2),
		([2.0, 1.41421356, 1.5, 1.6], 0.1),
		([2.0, 1.5, 1.9, 1.6], None),
	]
)
def test_get_first_timepoint_below(values, expected):
	series = pandas.Series(values, index = [0.0, 0.1, 0.2, 0.3])
	assert widgets.get_first_timepoint_below(series, math.sqrt(2)) == expected


def test_get_first_timepoint_below_is_strict():
	series = pandas.Series([2.0, math.sqrt(2), 1.0], index = [0, 1, 2])
	assert widgets.get_first_timepoint_below(series, math.sqrt(2)) == 2


def test_get_commit_hash():
	log = "0000000 1a2b3c4d5e6f7a8b9c0d Someone <someone@example.com> 1600000000 +0000\tcommit: first\n"
	with patch('squeezing.widgets._get_git_log', return_value = log):
		assert widgets.get_commit_hash() == "1a2b3c4"
	with patch('squeezing.widgets._get_git_log', return_value = ""):
		assert widgets.get_commit_hash() == "not available"


def test_only_helpers_are_exported():
	# Type aliases nothing annotates with were dropped.
	assert not hasattr(widgets, 'IterableValues')
	assert not hasattr(widgets, 'NumericType')
