from . import projectdata
from .configuration import RunConfig, format_config, load_config, parse_config
from .generate_tables import TIMESERIES_COLUMNS, generate_timeseries_table, write_table, write_timeseries
from .import_file import read_timeseries
from .presets import PRESETS, available_presets, get_preset
from .projectpaths import OutputFilenames
