from .metrics import (DUAN_THRESHOLD, SQUEEZING_THRESHOLD, Envelope, InsufficientDataError, SimulationSummary, SqueezingReport,
	duan_sum, envelope, final_period_minimum, first_squeezing_time, report, squeezing_table, summarize)
from .twomode import TwoModeConfig, TwoModeTrajectory, simulate_entanglement
