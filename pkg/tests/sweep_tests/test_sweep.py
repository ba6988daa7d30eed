from dataclasses import replace

import pandas
import pytest

from squeezing import simulation
from squeezing.oscillator.parameters import ConfigurationError
from squeezing.sweeps import sweep
from squeezing.sweeps.sweep import SweepSpec, apply_axis, run_sweep


@pytest.mark.parametrize(
	"axis, value, field_name, expected",
	[
		('temperature', 0.01, 'temperature_mK', 10.0),
		('gamma', 0.5, 'gamma', 0.5),
		('kappa_sq_avg', 1e3, 'kappa_sq_avg', 1e3),
		('threshold', 0.8, 'pulse_threshold', 0.8),
		('eta', 0.25, 'eta', 0.25),
	]
)
def test_apply_axis(quick_config, axis, value, field_name, expected):
	result = apply_axis(quick_config, axis, value)
	assert getattr(result, field_name) == pytest.approx(expected)
	# Everything else is kept.
	assert result.duration == quick_config.duration
	assert result.output_name == quick_config.output_name


@pytest.mark.parametrize(
	"axis, value, match",
	[
		('pressure', 1.0, "Unknown sweep axis"),
		('gamma', float('nan'), "finite"),
		('threshold', 1.5, "pulse.threshold"),
		('eta', 2.0, "eta"),
	]
)
def test_apply_axis_rejects_invalid_points(quick_config, axis, value, match):
	with pytest.raises(ConfigurationError, match = match):
		apply_axis(quick_config, axis, value)


def test_sweep_spec_validates_every_point(quick_config):
	with pytest.raises(ConfigurationError):
		SweepSpec(quick_config, 'threshold', [0.9, 1.2])
	with pytest.raises(ConfigurationError, match = "at least one value"):
		SweepSpec(quick_config, 'threshold', [])


def test_sweep_spec_values_are_a_tuple(quick_config):
	spec = SweepSpec(quick_config, 'eta', [1, 0.5])
	assert spec.values == (1.0, 0.5)
	assert [config.eta for config in spec.configs()] == [1.0, 0.5]


def test_single_point_sweep_is_a_single_simulation(quick_config):
	result = run_sweep(SweepSpec(quick_config, 'eta', [1.0]))
	summary = simulation.evaluate(quick_config)
	row = result.rows[0]
	assert row.error is None
	assert row.final_period_min_two_sigma == summary.final_period_min_two_sigma
	assert row.global_min_two_sigma == summary.global_min_two_sigma
	assert row.squeezed == summary.squeezed


def test_sweep_rows_follow_the_input_order(strong_config):
	spec = SweepSpec(strong_config, 'temperature', [1e-4, 0.0, 5e-5])
	result = run_sweep(spec)
	assert [row.index for row in result.rows] == [0, 1, 2]
	assert [row.value for row in result.rows] == [1e-4, 0.0, 5e-5]
	minima = [row.final_period_min_two_sigma for row in result.rows]
	# Colder is better.
	assert minima[1] < minima[2] < minima[0]
	assert result.rows[1].squeezed


def test_sweep_is_independent_of_the_worker_count(strong_config):
	spec = SweepSpec(strong_config, 'kappa_sq_avg', [1e5, 5e5, 2e6])
	serial = run_sweep(spec, workers = 1)
	parallel = run_sweep(spec, workers = 3)
	pandas.testing.assert_frame_equal(serial.to_table(), parallel.to_table())
	assert [row.config_text for row in serial.rows] == [row.config_text for row in parallel.rows]


def test_failed_points_are_recorded(quick_config):
	# A thermal start this hot is past the divergence limit straight away.
	spec = SweepSpec(quick_config, 'temperature', [0.0, 3e7])
	result = run_sweep(spec)
	good, bad = result.rows
	assert good.error is None
	assert good.final_period_min_two_sigma is not None
	assert bad.error is not None and "diverged" in bad.error
	assert bad.final_period_min_two_sigma is None


def test_result_tables(quick_config):
	result = run_sweep(SweepSpec(quick_config, 'eta', [1.0, 0.5]))
	table = result.to_table()
	assert list(table.columns) == [
		'index', 'axis', 'value', 'final_period_min_two_sigma', 'squeezed', 'first_squeezing_time', 'global_min_two_sigma',
		'det_end', 'error'
	]
	assert len(table) == 2
	data = result.to_dict()
	assert data['axis'] == 'eta'
	assert data['rows'][1]['value'] == 0.5
	assert 'measurement.eta = 0.5' in data['rows'][1]['config_text']


def test_config_text_reproduces_the_point(quick_config):
	from squeezing.dataio.configuration import parse_config
	result = run_sweep(SweepSpec(replace(quick_config, output_plot = False), 'eta', [0.5]))
	config = parse_config(result.rows[0].config_text)
	assert config.eta == 0.5
	assert simulation.evaluate(config).final_period_min_two_sigma == result.rows[0].final_period_min_two_sigma


def test_axes_cover_the_config():
	from squeezing.dataio.configuration import RunConfig
	fields = RunConfig.__dataclass_fields__
	for field_name, _ in sweep.AXES.values():
		assert field_name in fields
