import matplotlib

# Figures are only ever written to files.
matplotlib.use('Agg')
# Fixed ids inside the svg files, so identical data gives identical bytes.
matplotlib.rcParams['svg.hashsalt'] = 'strobosqueeze'

from .plottimeseries import SqueezingPlot, emit_plot
from .plotsweep import SweepPlot
from .plotentanglement import DuanPlot
