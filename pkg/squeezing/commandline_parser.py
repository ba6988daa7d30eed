import argparse
from pathlib import Path
from typing import List, Optional, Union

from dataclasses import dataclass

__VERSION__ = "0.3.0"
DEBUG = False

# Exit codes returned by `squeezing.workflows.main`. Documented in docs/markdown/usage.md.
EXIT_SUCCESS = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_CONFIGURATION = 3
EXIT_DIVERGENCE = 4
EXIT_IO = 5
EXIT_THRESHOLD = 6

ACCEPTED_COMMANDS = ["simulate", "reproduce", "sweep", "threshold", "optimize", "entangle"]
ACCEPTED_AXES = ["temperature", "gamma", "kappa_sq_avg", "threshold", "eta"]


# For convienience. Helps with autocomplete.
@dataclass
class ProgramOptions(argparse.Namespace):
	name: str
	config: Optional[Path] = None
	preset: Optional[str] = None
	output_folder: Optional[Path] = None
	workers: int = 1
	plot: bool = True
	axis: Optional[str] = None
	values: Optional[List[float]] = None
	lo: Optional[float] = None
	hi: Optional[float] = None
	thresholds: Optional[List[float]] = None
	phases: Optional[List[float]] = None
	minus_phase: float = 0.0


def parse_float_list(values: Union[str, List[float]]) -> List[float]:
	""" Parses a comma-separated list of numbers such as `0.01,0.0007,0`. Order is preserved. """
	if isinstance(values, str):
		fields = [i.strip() for i in values.split(',')]
		try:
			result = [float(i) for i in fields if i]
		except ValueError:
			message = f"Could not parse '{values}' as a comma-separated list of numbers."
			raise argparse.ArgumentTypeError(message)
	else:
		result = [float(i) for i in values]
	if not result:
		message = f"Expected at least one value, got '{values}'"
		raise argparse.ArgumentTypeError(message)
	return result


def parse_workflow_options(program_options: argparse.Namespace) -> ProgramOptions:
	""" Fills in the values that depend on other options. The `reproduce` command accepts the preset either as a positional
		argument or through `--preset`.
	"""
	preset_positional = getattr(program_options, 'preset_name', None)
	if preset_positional:
		program_options.preset = preset_positional
	if program_options.name == 'reproduce' and not program_options.preset:
		message = "The `reproduce` command requires a preset name."
		raise argparse.ArgumentTypeError(message)
	if program_options.workers < 1:
		program_options.workers = 1
	return program_options


#####################################################################################
############################### Shared Option Groups ################################
#####################################################################################
def _create_parser_group_main(parser: argparse.ArgumentParser):
	group_main = parser.add_argument_group(title = "Main Options")
	group_main.add_argument(
		"--config",
		help = "A `key = value` run configuration. Keys not given in the file use the documented defaults.",
		action = "store",
		dest = "config",
		type = Path,
		default = None
	)
	group_main.add_argument(
		"--preset",
		help = "Start from one of the figure presets. Keys in `--config` override the preset.",
		action = "store",
		dest = "preset",
		type = str,
		default = None
	)
	group_main.add_argument(
		"-o", "--out",
		help = "The folder to save the files to. Overrides `output.folder`.",
		action = "store",
		dest = "output_folder",
		type = Path,
		default = None
	)
	group_main.add_argument(
		"--workers",
		help = "The number of processes to use. Adding more workers than available cpu cores provides no speedup.",
		action = "store",
		dest = "workers",
		type = int,
		default = 1
	)
	group_main.add_argument(
		"--no-plot",
		help = "The svg files will not be generated.",
		action = "store_false",
		dest = "plot"
	)
	return group_main


#####################################################################################
########################## Main Application Parsers #################################
#####################################################################################
def create_simulate_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser("simulate", help = "Integrates the covariance equations for a single configuration.")
	_create_parser_group_main(parser)
	return parser


def create_reproduce_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser("reproduce", help = "Runs one of the figure presets.")
	parser.add_argument(
		"preset_name",
		help = "Name of the preset (ex. `fig-0K`).",
		nargs = "?",
		default = None
	)
	_create_parser_group_main(parser)
	return parser


def create_sweep_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser("sweep", help = "Runs one simulation per value of a parameter axis.")
	_create_parser_group_main(parser)
	group_sweep = parser.add_argument_group(title = "Sweep Options")
	group_sweep.add_argument(
		"--axis",
		help = "The parameter to vary. Temperatures are given in kelvin, rates in rad/s.",
		choices = ACCEPTED_AXES,
		dest = "axis",
		required = True
	)
	group_sweep.add_argument(
		"--values",
		help = "Comma-separated list of axis values, ex. `0.01,0.0007,0`",
		type = parse_float_list,
		dest = "values",
		required = True
	)
	return parser


def create_threshold_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser(
		"threshold",
		help = "Bisects an axis for the value at which the final-period minimum of 2σ crosses √2."
	)
	_create_parser_group_main(parser)
	group_threshold = parser.add_argument_group(title = "Threshold Search Options")
	group_threshold.add_argument("--axis", choices = ACCEPTED_AXES, dest = "axis", required = True)
	group_threshold.add_argument("--lo", help = "One end of the bracket.", type = float, dest = "lo", required = True)
	group_threshold.add_argument("--hi", help = "The other end of the bracket.", type = float, dest = "hi", required = True)
	return parser


def create_optimize_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser(
		"optimize",
		help = "Grid search plus golden-section refinement of the gating threshold and phase."
	)
	_create_parser_group_main(parser)
	group_optimize = parser.add_argument_group(title = "Optimization Options")
	group_optimize.add_argument(
		"--thresholds",
		help = "Comma-separated grid of gating thresholds in (0, 1).",
		type = parse_float_list,
		dest = "thresholds",
		default = [0.8, 0.9, 0.95]
	)
	group_optimize.add_argument(
		"--phases",
		help = "Comma-separated grid of gating phases, in radians.",
		type = parse_float_list,
		dest = "phases",
		default = [0.0]
	)
	return parser


def create_entangle_parser(subparsers) -> argparse.ArgumentParser:
	parser = subparsers.add_parser(
		"entangle",
		help = "Evolves the two collective modes of a resonator pair and evaluates the Duan criterion."
	)
	_create_parser_group_main(parser)
	parser.add_argument(
		"--minus-phase",
		help = "Extra gating phase offset of the P- probe, in radians. At 0 both collective quadratures are squeezed at the same instants.",
		type = float,
		dest = "minus_phase",
		default = 0.0
	)
	return parser


def create_parser() -> argparse.ArgumentParser:
	parser_parent = argparse.ArgumentParser(
		description = "Simulates the conditional covariance dynamics of a stroboscopically probed mechanical resonator.",
		formatter_class = argparse.ArgumentDefaultsHelpFormatter
	)
	parser_parent.add_argument(
		"-v", "--version",
		action = 'version',
		version = f"%(prog)s {__VERSION__}"
	)

	subparsers = parser_parent.add_subparsers(dest = 'name')  # Each subparser can be identified by the `name` attribute.
	subparsers.required = True
	create_simulate_parser(subparsers)
	create_reproduce_parser(subparsers)
	create_sweep_parser(subparsers)
	create_threshold_parser(subparsers)
	create_optimize_parser(subparsers)
	create_entangle_parser(subparsers)

	return parser_parent


def get_arguments(arguments: Optional[List[str]] = None) -> ProgramOptions:
	""" Implemented here to make sure the default parameters are properly applied. """
	parser = create_parser()
	args = parser.parse_args(arguments)

	try:
		args = parse_workflow_options(args)
	except argparse.ArgumentTypeError as exception:
		parser.error(str(exception))
	return args
