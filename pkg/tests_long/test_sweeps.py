import math
from dataclasses import replace

import pytest

from squeezing.analysis.metrics import SQUEEZING_THRESHOLD
from squeezing.dataio import presets
from squeezing.dataio.generate_tables import write_table
from squeezing.simulation import evaluate
from squeezing.sweeps import SweepSpec, find_threshold, optimize_pulse, run_sweep
from squeezing.sweeps.sweep import apply_axis

TEMPERATURES = [10e-3, 0.7e-3, 0.0]


def test_temperature_sweep_matches_the_presets(preset_runs):
	spec = SweepSpec(presets.get_preset('fig-0K'), 'temperature', TEMPERATURES)
	result = run_sweep(spec, workers = 3)
	hot, cooled, cold = [row.final_period_min_two_sigma for row in result.rows]
	assert hot > SQUEEZING_THRESHOLD
	assert cold < cooled < SQUEEZING_THRESHOLD
	assert cooled == pytest.approx(preset_runs.summary('fig-0p7mK').final_period_min_two_sigma, rel = 1e-9)
	assert cold == pytest.approx(preset_runs.summary('fig-0K').final_period_min_two_sigma, rel = 1e-9)


def test_sweep_output_is_byte_identical(tmp_path):
	spec = SweepSpec(presets.get_preset('fig-0K'), 'temperature', TEMPERATURES)
	serial = write_table(run_sweep(spec, workers = 1).to_table(), tmp_path / "serial.csv")
	parallel = write_table(run_sweep(spec, workers = 3).to_table(), tmp_path / "parallel.csv")
	assert serial.read_bytes() == parallel.read_bytes()


def test_weaker_bath_coupling_rescues_ten_millikelvin():
	spec = SweepSpec(presets.get_preset('fig-10mK'), 'gamma', [2 * math.pi * 10, 0.1])
	strong_coupling, weak_coupling = run_sweep(spec, workers = 2).rows
	assert not strong_coupling.squeezed
	assert weak_coupling.squeezed
	assert weak_coupling.final_period_min_two_sigma < strong_coupling.global_min_two_sigma


def test_temperature_threshold_is_certified():
	base = presets.get_preset('fig-0K')
	# Given hot end first.
	result = find_threshold(base, 'temperature', 10e-3, 0.7e-3)
	assert 0.7e-3 < result.value < 10e-3
	assert result.certified

	squeezed_side, other_side = result.certificate
	assert squeezed_side < result.value < other_side
	assert evaluate(apply_axis(base, 'temperature', squeezed_side)).squeezed
	assert not evaluate(apply_axis(base, 'temperature', other_side)).squeezed

	squeezed_end, other_end = result.bracket
	assert squeezed_end <= result.value <= other_end
	assert other_end - squeezed_end <= 4e-3 * result.value
	assert set(result.evaluations['stage']) == {'bracket', 'bisect', 'certificate'}


def test_optimize_against_the_exhaustive_grid():
	base = replace(presets.get_preset('fig-zoom-0K'), output_plot = False)
	thresholds = [0.8, 0.9, 0.95]
	result = optimize_pulse(base, thresholds, [0.0])
	exhaustive = [evaluate(replace(base, pulse_threshold = value)).final_period_min_two_sigma for value in thresholds]
	assert result.grid['objective'].tolist() == exhaustive
	assert result.grid_best == min(exhaustive)
	assert result.objective <= min(exhaustive)
	assert 0.8 <= result.threshold <= 0.95
