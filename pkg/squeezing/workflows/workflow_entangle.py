from loguru import logger

from squeezing import commandline_parser, simulation
from squeezing.dataio import projectdata, projectpaths
from squeezing.dataio.configuration import RunConfig
from squeezing.graphics import DuanPlot


def run_entanglement_workflow(config: RunConfig, minus_phase: float = 0.0, workers: int = 1) -> projectdata.DataEntanglement:
	"""
		Probes X+ and P- with the configured schedule, the P- pulses offset by an extra `minus_phase` radians,
		then writes the Duan sum Var(X+) + Var(P-) of the pair.
	"""
	config = config.resolve()
	paths = projectpaths.OutputFilenames(config.output_folder, config.output_name)
	data_basic = projectdata.DataWorkflowBasic(version = commandline_parser.__VERSION__, command = "entangle", config = config)
	paths.save_config(config)

	trajectory = simulation.simulate_two_mode(config, minus_phase, workers = workers)
	data = projectdata.DataEntanglement(trajectory = trajectory, minus_phase = minus_phase)
	paths.save_workflow_entanglement(data_basic, data)
	if config.output_plot:
		DuanPlot().plot(trajectory, paths.filename_figure_duan)

	if trajectory.first_entangled_time is None:
		logger.info(f"The pair is never entangled; final Duan sum {trajectory.final_duan_sum:.4f}")
	else:
		logger.info(
			f"First entangled at t = {trajectory.first_entangled_time * 1e6:.3f} μs; final Duan sum {trajectory.final_duan_sum:.4f}"
		)
	logger.info(f"Saved the results to {paths.folder_output}")
	return data
