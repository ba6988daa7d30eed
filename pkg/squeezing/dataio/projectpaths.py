import json
from pathlib import Path
from typing import Any, Dict, Union

from squeezing import widgets
from squeezing.dataio import generate_tables
from squeezing.dataio.configuration import RunConfig, format_config


def _to_builtin(value: Any) -> Any:
	# numpy scalars (bool_, int64) that come out of DataFrame records.
	if hasattr(value, "item"):
		return value.item()
	message = f"Object of type {type(value).__name__} is not JSON serializable"
	raise TypeError(message)


def write_json(data: Dict[str, Any], path: Path) -> Path:
	try:
		path.write_text(json.dumps(data, indent = 4, sort_keys = True, default = _to_builtin) + "\n")
	except OSError as exception:
		message = f"Could not write '{path}': {exception}"
		raise OSError(message) from exception
	return path


class OutputFilenames:
	""" Used to organize the files generated by the workflows.
		.
		|---- .summary.json
		|---- .sweep.json / .threshold.json / .optimize.json / .entanglement.json
		|---- tables/
		|----|---- .timeseries.csv
		|----|---- .envelope.csv
		|----|---- .sweep.csv / .threshold.csv / .optimize.csv / .entanglement.csv
		|---- graphics/
		|----|---- .squeezing.svg / .sweep.svg / .duan.svg
		|---- supplementary-files/
		|----|---- .config.txt
	"""

	def __str__(self):
		string = f"OutputFilenames('{self.folder_output}')"
		return string

	def __init__(self, output: Union[str, Path], name: str):
		self.name = name

		self.folder_output = widgets.checkdir(output).absolute()
		self.folder_supplementary = widgets.checkdir(self.folder_output / "supplementary-files")
		self.folder_figures = widgets.checkdir(self.folder_output / "graphics")
		self.folder_tables = widgets.checkdir(self.folder_output / "tables")

		# General files
		self.filename_summary: Path = self.folder_output / (name + '.summary.json')
		self.filename_sweep: Path = self.folder_output / (name + '.sweep.json')
		self.filename_threshold: Path = self.folder_output / (name + '.threshold.json')
		self.filename_optimize: Path = self.folder_output / (name + '.optimize.json')
		self.filename_entanglement: Path = self.folder_output / (name + '.entanglement.json')

		# tables
		self.filename_table_timeseries: Path = self.folder_tables / (name + '.timeseries.csv')
		self.filename_table_envelope: Path = self.folder_tables / (name + '.envelope.csv')
		self.filename_table_sweep: Path = self.folder_tables / (name + '.sweep.csv')
		self.filename_table_threshold: Path = self.folder_tables / (name + '.threshold.csv')
		self.filename_table_optimize: Path = self.folder_tables / (name + '.optimize.csv')
		self.filename_table_entanglement: Path = self.folder_tables / (name + '.entanglement.csv')

		# graphics
		self.filename_figure_squeezing: Path = self.folder_figures / (name + '.squeezing.svg')
		self.filename_figure_sweep: Path = self.folder_figures / (name + '.sweep.svg')
		self.filename_figure_duan: Path = self.folder_figures / (name + '.duan.svg')

		# supplementary files
		self.filename_config: Path = self.folder_supplementary / (name + '.config.txt')

	def save_config(self, config: RunConfig):
		try:
			self.filename_config.write_text(format_config(config))
		except OSError as exception:
			message = f"Could not write '{self.filename_config}': {exception}"
			raise OSError(message) from exception

	def save_workflow_simulation(self, data_basic, data):
		generate_tables.write_timeseries(data.trajectory, self.filename_table_timeseries)
		if data.envelope is not None:
			generate_tables.write_table(data.envelope.table, self.filename_table_envelope)
		write_json({**data_basic.to_dict(), **data.to_dict()}, self.filename_summary)

	def save_workflow_sweep(self, data_basic, result):
		generate_tables.write_table(result.to_table(), self.filename_table_sweep)
		write_json({**data_basic.to_dict(), **result.to_dict()}, self.filename_sweep)

	def save_workflow_threshold(self, data_basic, result):
		generate_tables.write_table(result.evaluations, self.filename_table_threshold)
		write_json({**data_basic.to_dict(), **result.to_dict()}, self.filename_threshold)

	def save_workflow_optimize(self, data_basic, result):
		generate_tables.write_table(result.grid, self.filename_table_optimize)
		write_json({**data_basic.to_dict(), **result.to_dict()}, self.filename_optimize)

	def save_workflow_entanglement(self, data_basic, data):
		generate_tables.write_table(data.trajectory.table, self.filename_table_entanglement)
		write_json({**data_basic.to_dict(), **data.to_dict()}, self.filename_entanglement)
