"""
	Runs a resolved `RunConfig`. Every higher-level workflow (sweeps, threshold searches, optimization, the command line)
	goes through these functions, so a configuration always maps to the same integration.
"""
from squeezing.analysis.metrics import SimulationSummary, summarize
from squeezing.analysis.twomode import TwoModeConfig, TwoModeTrajectory, simulate_entanglement
from squeezing.dataio.configuration import RunConfig
from squeezing.oscillator.dynamics import Trajectory, integrate
from squeezing.oscillator.schedule import shifted


def simulate(config: RunConfig) -> Trajectory:
	config = config.resolve()
	derived = config.derived()
	return integrate(
		initial = config.initial_state(derived),
		schedule = config.schedule(derived),
		physical = config.physical_params(),
		derived = derived,
		duration = config.duration,
		grid_dt = config.grid_dt,
		steps_per_period = config.steps_per_period
	)


def evaluate(config: RunConfig) -> SimulationSummary:
	""" Simulates `config` and reduces the trajectory to its summary. """
	return summarize(simulate(config), config.omega)


def two_mode_config(config: RunConfig, minus_phase: float = 0.0) -> TwoModeConfig:
	""" Both collective modes share the physical parameters of `config`. With `minus_phase = 0` the P- probe is gated at
		the instants the X+ probe is, so both collective quadratures are squeezed together. Any other value is an extra
		offset of the P- pulse train, in radians.
	"""
	config = config.resolve()
	derived = config.derived()
	schedule = config.schedule(derived)
	return TwoModeConfig(
		shared = config.physical_params(),
		derived = derived,
		schedule_plus = schedule,
		schedule_minus = shifted(schedule, minus_phase),
		initial = config.initial_state(derived),
		steps_per_period = config.steps_per_period
	)


def simulate_two_mode(config: RunConfig, minus_phase: float = 0.0, workers: int = 1) -> TwoModeTrajectory:
	config = config.resolve()
	return simulate_entanglement(two_mode_config(config, minus_phase), config.duration, config.grid_dt, workers)
