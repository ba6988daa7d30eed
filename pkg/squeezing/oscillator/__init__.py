from .parameters import ConfigurationError, DerivedParams, PhysicalParams, derive, thermal_occupation
from .schedule import PulseSchedule, build_schedule, duty_cycle, effective_rate, kappa_sq_at, pulse_edges, shifted
from .dynamics import (CovarianceState, DivergenceError, Trajectory, TrajectoryParameters, ground_state, integrate, propagate, rhs,
	rotate_quadratures, thermal_state)
from .closedform import free_evolution_closed_form, measurement_only_closed_form
