import math

import pandas
import pytest

from squeezing.analysis import metrics
from squeezing.analysis.metrics import InsufficientDataError, SQUEEZING_THRESHOLD
from squeezing.oscillator.dynamics import CovarianceState, Trajectory, ground_state, integrate, thermal_state
from squeezing.oscillator.schedule import PulseSchedule

OMEGA = 2 * math.pi * 1e6
PERIOD = 1e-6


def constant_trajectory(value: float, periods: float = 3, samples_per_period: int = 100) -> Trajectory:
	count = int(round(periods * samples_per_period)) + 1
	grid_dt = PERIOD / samples_per_period
	table = pandas.DataFrame(
		{
			't_s':      [i * grid_dt for i in range(count)],
			'a11':      [value] * count,
			'a12':      [0.0] * count,
			'a21':      [0.0] * count,
			'a22':      [value] * count,
			'kappa_sq': [0.0] * count
		}
	)
	return Trajectory(table = table, grid_dt = grid_dt, params_snapshot = None)


@pytest.mark.parametrize(
	"state, two_sigma_x, two_sigma_p, squeezed",
	[
		(ground_state(), math.sqrt(2), math.sqrt(2), False),
		(CovarianceState(0.0, 0.405, 0.0, 0.0, 1 / 0.405), 0.9, math.sqrt(2 / 0.405), True),
		(thermal_state(416.7), 28.87, 28.87, False),
		(CovarianceState(0.0, 3.0, 0.0, 0.0, 0.5), math.sqrt(6), 1.0, True),
	]
)
def test_report(state, two_sigma_x, two_sigma_p, squeezed):
	result = metrics.report(state)
	assert result.two_sigma_x == pytest.approx(two_sigma_x, rel = 1e-3)
	assert result.two_sigma_p == pytest.approx(two_sigma_p, rel = 1e-3)
	assert result.min_two_sigma == min(result.two_sigma_x, result.two_sigma_p)
	assert result.squeezed == squeezed
	assert result.det == pytest.approx(state.det)


def test_squeezed_and_pure_are_independent():
	# A squeezed thermal state: one quadrature below the threshold, yet det > 1.
	result = metrics.report(CovarianceState(0.0, 0.8, 0.0, 0.0, 4.0))
	assert result.squeezed
	assert result.det > 1


@pytest.mark.parametrize(
	"var_x_plus, var_p_minus, total, entangled",
	[
		(0.5, 0.5, 1.0, False),
		(0.4, 0.4, 0.8, True),
		(0.2025, 0.2025, 0.405, True),
		(1.0, 0.2, 1.2, False),
	]
)
def test_duan_sum(var_x_plus, var_p_minus, total, entangled):
	result, flag = metrics.duan_sum(var_x_plus, var_p_minus)
	assert result == pytest.approx(total)
	assert flag == entangled


def test_duan_sum_rejects_negative_variances():
	with pytest.raises(ValueError):
		metrics.duan_sum(-0.1, 0.5)


def test_squeezing_table():
	table = metrics.squeezing_table(constant_trajectory(2.0, periods = 1))
	assert {'two_sigma_x', 'two_sigma_p', 'min_two_sigma', 'det'} <= set(table.columns)
	assert (table['two_sigma_x'] == 2.0).all()
	assert (table['det'] == 4.0).all()


def test_envelope_of_a_constant_trajectory():
	result = metrics.envelope(constant_trajectory(5.0), OMEGA)
	expected = math.sqrt(10.0)
	assert result.table['period'].tolist() == [0, 1, 2]
	assert result.table['complete'].all()
	for column in ['two_sigma_x_min', 'two_sigma_x_max', 'two_sigma_p_min', 'two_sigma_p_max']:
		assert result.table[column].tolist() == pytest.approx([expected] * 3)
	assert result.global_min == pytest.approx(expected)
	assert result.global_min_time == 0.0


def test_envelope_with_a_partial_period():
	result = metrics.envelope(constant_trajectory(1.0, periods = 2.5), OMEGA)
	assert result.table['complete'].tolist() == [True, True, False]
	assert result.table['t_start'].tolist() == pytest.approx([0.0, PERIOD, 2 * PERIOD])


def test_envelope_finds_the_global_minimum():
	trajectory = constant_trajectory(1.0, periods = 2)
	trajectory.table.loc[150, 'a22'] = 0.5
	result = metrics.envelope(trajectory, OMEGA)
	assert result.global_min == pytest.approx(1.0)
	assert result.global_min_time == pytest.approx(1.5 * PERIOD)
	assert result.table['two_sigma_p_min'].tolist() == pytest.approx([math.sqrt(2), 1.0])


def test_envelope_rejects_short_trajectories():
	with pytest.raises(InsufficientDataError, match = "shorter than one mechanical period"):
		metrics.envelope(constant_trajectory(1.0, periods = 0.5), OMEGA)


def test_envelope_rejects_coarse_trajectories():
	with pytest.raises(InsufficientDataError, match = "samples per period"):
		metrics.envelope(constant_trajectory(1.0, periods = 3, samples_per_period = 20), OMEGA)


def test_final_period_minimum():
	trajectory = constant_trajectory(1.0, periods = 3)
	# A dip before the last period is ignored.
	trajectory.table.loc[50, 'a11'] = 0.1
	assert metrics.final_period_minimum(trajectory, OMEGA) == pytest.approx(math.sqrt(2))
	trajectory.table.loc[250, 'a11'] = 0.32
	assert metrics.final_period_minimum(trajectory, OMEGA) == pytest.approx(0.8)


def test_first_squeezing_time():
	trajectory = constant_trajectory(1.0, periods = 1)
	assert metrics.first_squeezing_time(trajectory) is None
	trajectory.table.loc[40:, 'a11'] = 0.9
	assert metrics.first_squeezing_time(trajectory) == pytest.approx(0.4 * PERIOD)


def test_summarize_ground_state(physical, derived):
	trajectory = integrate(ground_state(), PulseSchedule(mode = "off"), physical, derived, 2 * PERIOD, PERIOD / 100, 200)
	summary = metrics.summarize(trajectory, OMEGA)
	assert summary.final_period_min_two_sigma == pytest.approx(SQUEEZING_THRESHOLD)
	assert not summary.squeezed
	assert summary.first_squeezing_time is None
	assert summary.det_end == pytest.approx(1.0)
	assert summary.samples == 201
	assert summary.duty_cycle == 0.0
	assert summary.effective_rate == 0.0
	assert summary.nbar == 0.0
	assert summary.capN == 1.0


def test_summarize_with_pulses(quick_config):
	from squeezing.simulation import simulate
	trajectory = simulate(quick_config)
	summary = metrics.summarize(trajectory, quick_config.omega)
	# At 0 K any measurement pushes one quadrature below the vacuum level.
	assert summary.squeezed
	assert summary.final_period_min_two_sigma < SQUEEZING_THRESHOLD
	# The state is untouched until the warm-up ends.
	assert 2.5 * PERIOD < summary.first_squeezing_time <= 2.6 * PERIOD
	assert summary.kappa_sq_peak == pytest.approx(10 * summary.kappa_sq_avg)
	assert summary.duty_cycle == pytest.approx(0.2871, abs = 1e-4)
	assert summary.effective_rate == pytest.approx(summary.kappa_sq_peak * summary.duty_cycle)
	assert set(summary.to_dict()) >= {'final_period_min_two_sigma', 'squeezed', 'det_end', 'kappa_sq_formula'}
