from pathlib import Path
from typing import Optional

import matplotlib.pyplot as plt

from squeezing.analysis import metrics
from squeezing.analysis.metrics import InsufficientDataError
from squeezing.graphics.plottimeseries import BasePlot
from squeezing.sweeps.sweep import SweepResult

AXIS_LABELS = {
	'temperature':  "Temperature (K)",
	'gamma':        "γ (rad/s)",
	'kappa_sq_avg': "κ² average (1/s)",
	'threshold':    "Gating threshold",
	'eta':          "η"
}


class SweepPlot(BasePlot):
	""" Final-period minimum of 2σ against the swept parameter. Failed points are left out. """

	def __init__(self, scale: int = 1):
		super().__init__(scale)
		self.markertype = 'o'
		self.markersize = 8 * self.scale
		self.yaxis_label = "Final-period minimum 2σ"

	def plot(self, result: SweepResult, filename: Optional[Path] = None) -> plt.Figure:
		table = result.to_table()
		table = table[table['error'].isna()].sort_values('value')
		if table.empty:
			message = "Every point of the sweep failed; there is nothing to plot."
			raise InsufficientDataError(message)

		fig, ax = self._initialize_plot()
		ax.plot(
			table['value'], table['final_period_min_two_sigma'].astype(float),
			color = self.default_color,
			marker = self.markertype,
			markersize = self.markersize,
			linewidth = self.linewidth
		)
		self._add_reference_line(ax, metrics.SQUEEZING_THRESHOLD, metrics.SQUEEZING_THRESHOLD_LABEL)
		self._apply_style(ax, f"Sweep over {result.axis}", AXIS_LABELS.get(result.axis, result.axis), self.yaxis_label)
		if filename:
			self.save_figure(fig, filename)
		return fig
