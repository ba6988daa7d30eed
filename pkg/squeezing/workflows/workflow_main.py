"""
	Entry point shared by the `strobosqueeze` script and `python -m squeezing`. Returns the process exit code:
	0 success, 1 unexpected error, 2 usage error, 3 configuration error, 4 divergence, 5 I/O error,
	6 threshold search failure.
"""
import argparse
import sys
from dataclasses import replace
from typing import List, Optional

from loguru import logger

from squeezing import commandline_parser, widgets
from squeezing.dataio import presets
from squeezing.dataio.configuration import RunConfig, format_config, load_config
from squeezing.oscillator.dynamics import DivergenceError
from squeezing.oscillator.parameters import ConfigurationError
from squeezing.sweeps import ThresholdSearchError
from squeezing.workflows.workflow_entangle import run_entanglement_workflow
from squeezing.workflows.workflow_simulate import run_simulation_workflow
from squeezing.workflows.workflow_sweeps import run_optimize_workflow, run_sweep_workflow, run_threshold_workflow


def configure_logging():
	logger.remove()  # Need to remove the default sink so that the logger doesn't print messages twice.
	if commandline_parser.DEBUG:
		logger.add(sys.stderr, level = "DEBUG", format = "{time:YYYY-MM-DD HH:mm:ss} {level} {message}")
	else:
		logger.add(sys.stderr, level = 'INFO', format = "{time:YYYY-MM-DD HH:mm:ss} {level} {message}")


def resolve_config(program_options: argparse.Namespace) -> RunConfig:
	""" Preset, then the `--config` file key by key, then the command-line overrides. """
	if program_options.preset:
		base = presets.get_preset(program_options.preset)
	else:
		base = RunConfig()
	if program_options.config:
		logger.info(f"Reading '{program_options.config}' as the run configuration.")
		config = load_config(program_options.config, defaults = base)
	else:
		config = base
	if program_options.output_folder is not None:
		config = replace(config, output_folder = str(program_options.output_folder))
	if not program_options.plot:
		config = replace(config, output_plot = False)
	return config.resolve()


def run_workflow(program_options: argparse.Namespace):
	config = resolve_config(program_options)
	logger.info(f"strobosqueeze {commandline_parser.__VERSION__} (commit {widgets.get_commit_hash()})")
	logger.info("Running with the following configuration")
	for line in format_config(config).split('\n'):
		if line:
			logger.info(f"\t{line}")

	command = program_options.name
	if command in ("simulate", "reproduce"):
		run_simulation_workflow(config, command)
	elif command == "sweep":
		run_sweep_workflow(config, program_options.axis, program_options.values, program_options.workers)
	elif command == "threshold":
		run_threshold_workflow(config, program_options.axis, program_options.lo, program_options.hi)
	elif command == "optimize":
		run_optimize_workflow(config, program_options.thresholds, program_options.phases)
	elif command == "entangle":
		run_entanglement_workflow(config, program_options.minus_phase, program_options.workers)
	else:
		message = f"Unknown command '{command}'. Expected one of {commandline_parser.ACCEPTED_COMMANDS}"
		raise ValueError(message)


def main(arguments: Optional[List[str]] = None) -> int:
	configure_logging()
	try:
		program_options = commandline_parser.get_arguments(arguments)
	except SystemExit as exception:
		# argparse exits with 2 on usage errors and 0 after --help/--version.
		return exception.code if isinstance(exception.code, int) else commandline_parser.EXIT_USAGE

	try:
		run_workflow(program_options)
	except ConfigurationError as exception:
		logger.error(f"Configuration error: {exception}")
		return commandline_parser.EXIT_CONFIGURATION
	except ThresholdSearchError as exception:
		logger.error(f"Threshold search failed: {exception}")
		return commandline_parser.EXIT_THRESHOLD
	except DivergenceError as exception:
		logger.error(f"The simulation diverged: {exception}")
		return commandline_parser.EXIT_DIVERGENCE
	except OSError as exception:
		logger.error(f"I/O error: {exception}")
		return commandline_parser.EXIT_IO
	except Exception as exception:
		logger.exception(f"Unexpected error: {exception}")
		return commandline_parser.EXIT_UNEXPECTED
	return commandline_parser.EXIT_SUCCESS
