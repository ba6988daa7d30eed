"""
	Runs a single configuration and saves everything needed to inspect and re-run it.
	.
	|---- .summary.json
	|---- tables/
	|----|---- .timeseries.csv
	|----|---- .envelope.csv
	|---- graphics/
	|----|---- .squeezing.svg
	|---- supplementary-files/
	|----|---- .config.txt
"""
from typing import Optional

from loguru import logger

from squeezing import commandline_parser, simulation
from squeezing.analysis import metrics
from squeezing.analysis.metrics import InsufficientDataError
from squeezing.dataio import projectdata, projectpaths
from squeezing.dataio.configuration import RunConfig
from squeezing.graphics import emit_plot
from squeezing.oscillator.dynamics import Trajectory


def _get_envelope(trajectory: Trajectory, omega: float) -> Optional[metrics.Envelope]:
	try:
		return metrics.envelope(trajectory, omega)
	except InsufficientDataError as exception:
		logger.debug(f"Skipping the envelope table: {exception}")
		return None


def run_simulation_workflow(config: RunConfig, command: str = "simulate") -> projectdata.DataSimulation:
	config = config.resolve()
	paths = projectpaths.OutputFilenames(config.output_folder, config.output_name)
	data_basic = projectdata.DataWorkflowBasic(
		version = commandline_parser.__VERSION__,
		command = command,
		config = config
	)
	paths.save_config(config)

	logger.info(f"Integrating {config.duration * 1e6:.1f} μs...")
	trajectory = simulation.simulate(config)
	data = projectdata.DataSimulation(
		trajectory = trajectory,
		summary = metrics.summarize(trajectory, config.omega),
		envelope = _get_envelope(trajectory, config.omega)
	)
	paths.save_workflow_simulation(data_basic, data)
	if config.output_plot:
		emit_plot(trajectory, config.omega, paths.filename_figure_squeezing, title = config.preset or config.output_name)

	summary = data.summary
	state = "squeezed" if summary.squeezed else "not squeezed"
	logger.info(f"Final-period minimum 2σ = {summary.final_period_min_two_sigma:.4f} ({state})")
	if summary.first_squeezing_time is not None:
		logger.info(f"First squeezed at t = {summary.first_squeezing_time * 1e6:.3f} μs")
	logger.info(f"Saved the results to {paths.folder_output}")
	return data
