from typing import Sequence

from loguru import logger

from squeezing import commandline_parser
from squeezing.analysis.metrics import InsufficientDataError
from squeezing.dataio import projectdata, projectpaths
from squeezing.dataio.configuration import RunConfig
from squeezing.graphics import SweepPlot
from squeezing.sweeps import OptimizationResult, SweepResult, SweepSpec, ThresholdResult, find_threshold, optimize_pulse, \
	run_sweep


def _prepare(config: RunConfig, command: str):
	config = config.resolve()
	paths = projectpaths.OutputFilenames(config.output_folder, config.output_name)
	data_basic = projectdata.DataWorkflowBasic(version = commandline_parser.__VERSION__, command = command, config = config)
	paths.save_config(config)
	return config, paths, data_basic


def run_sweep_workflow(config: RunConfig, axis: str, values: Sequence[float], workers: int = 1) -> SweepResult:
	config, paths, data_basic = _prepare(config, "sweep")
	spec = SweepSpec(base = config, axis = axis, values = tuple(values))
	result = run_sweep(spec, workers = workers)
	paths.save_workflow_sweep(data_basic, result)
	if config.output_plot:
		try:
			SweepPlot().plot(result, paths.filename_figure_sweep)
		except InsufficientDataError as exception:
			logger.warning(f"Skipping the sweep plot: {exception}")

	failed = sum(1 for row in result.rows if row.error)
	logger.info(f"Evaluated {len(result.rows)} values of '{axis}' ({failed} failed)")
	logger.info(f"Saved the results to {paths.folder_output}")
	return result


def run_threshold_workflow(config: RunConfig, axis: str, lo: float, hi: float) -> ThresholdResult:
	config, paths, data_basic = _prepare(config, "threshold")
	result = find_threshold(config, axis, lo, hi)
	paths.save_workflow_threshold(data_basic, result)
	logger.info(f"Squeezing threshold along '{axis}': {result.value!r} (bracket {result.bracket})")
	logger.info(f"Saved the results to {paths.folder_output}")
	return result


def run_optimize_workflow(config: RunConfig, thresholds: Sequence[float], phases: Sequence[float]) -> OptimizationResult:
	config, paths, data_basic = _prepare(config, "optimize")
	result = optimize_pulse(config, thresholds, phases)
	paths.save_workflow_optimize(data_basic, result)
	logger.info(f"Best pulse: threshold = {result.threshold!r}, phase = {result.phase!r}, 2σ = {result.objective:.6f}")
	logger.info(f"Saved the results to {paths.folder_output}")
	return result
