from .sweep import AXES, SweepResult, SweepRow, SweepSpec, apply_axis, run_sweep
from .threshold import ThresholdResult, ThresholdSearchError, find_threshold
from .optimize import OptimizationResult, optimize_pulse
