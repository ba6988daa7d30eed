import pytest

from squeezing import simulation
from squeezing.oscillator.parameters import ConfigurationError
from squeezing.sweeps import optimize
from squeezing.sweeps.optimize import optimize_pulse


def parabola(x: float) -> float:
	return (x - 0.3) ** 2


def test_refine_an_interior_minimum():
	result = optimize._refine(parabola, [0.0, 0.25, 0.5], 0.25, parabola(0.25))
	assert result is not None
	argument, value = result
	assert argument == pytest.approx(0.3, abs = 1e-3)
	assert value < parabola(0.25)


@pytest.mark.parametrize(
	"grid, best",
	[
		([0.0, 0.25, 0.5], 0.0),
		([0.0, 0.25, 0.5], 0.5),
		([0.25], 0.25),
	]
)
def test_refine_skips_boundary_points(grid, best):
	assert optimize._refine(parabola, grid, best, parabola(best)) is None


def test_refine_needs_a_strict_bracket():
	flat = lambda x: 1.0
	assert optimize._refine(flat, [0.0, 0.5, 1.0], 0.5, 1.0) is None


@pytest.mark.parametrize(
	"thresholds, phases",
	[
		([], [0.0]),
		([0.9], []),
		([0.9, 1.0], [0.0]),
		([0.9], [float('inf')]),
	]
)
def test_invalid_search_space(quick_config, thresholds, phases):
	with pytest.raises(ConfigurationError):
		optimize_pulse(quick_config, thresholds, phases)


def test_single_point(strong_config):
	result = optimize_pulse(strong_config, [0.9], [0.0])
	expected = simulation.evaluate(strong_config).final_period_min_two_sigma
	assert result.threshold == 0.9
	assert result.phase == 0.0
	assert result.objective == expected
	assert result.grid_best == expected
	assert len(result.grid) == 1
	assert result.refinements.empty


def test_result_is_never_worse_than_the_grid(strong_config):
	result = optimize_pulse(strong_config, [0.8, 0.95], [0.0, 0.5])
	assert len(result.grid) == 4
	assert result.objective <= result.grid['objective'].min()
	assert result.grid_best == result.grid['objective'].min()
	data = result.to_dict()
	assert len(data['grid']) == 4
	assert set(data) == {'threshold', 'phase', 'objective', 'grid_best', 'grid', 'refinements'}
