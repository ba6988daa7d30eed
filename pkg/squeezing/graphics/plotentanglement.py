from pathlib import Path
from typing import Optional

import matplotlib.pyplot as plt

from squeezing.analysis.metrics import DUAN_THRESHOLD, InsufficientDataError
from squeezing.analysis.twomode import TwoModeTrajectory
from squeezing.graphics.plottimeseries import BasePlot


class DuanPlot(BasePlot):
	""" Var(X+) + Var(P-) against time; the pair is entangled below 1. """

	def __init__(self, scale: int = 1):
		super().__init__(scale)
		self.color_sum = "#1f4e79"
		self.color_terms = "#7f7f7f"
		self.xaxis_label = "Time (μs)"
		self.yaxis_label = "Variance"

	def plot(self, trajectory: TwoModeTrajectory, filename: Optional[Path] = None) -> plt.Figure:
		table = trajectory.table
		if len(table) < 2:
			message = f"A plot needs at least two samples, the trajectory has {len(table)}"
			raise InsufficientDataError(message)

		fig, ax = self._initialize_plot()
		time = table['t_s'] * 1e6
		ax.plot(time, table['duan_sum'], color = self.color_sum, linewidth = self.linewidth, label = "Var(X+) + Var(P-)")
		ax.plot(time, table['var_x_plus'], color = self.color_terms, linewidth = self.linewidth / 2, label = "Var(X+)")
		ax.plot(
			time, table['var_p_minus'],
			color = self.color_terms, linewidth = self.linewidth / 2, linestyle = 'dotted', label = "Var(P-)"
		)
		self._add_reference_line(ax, DUAN_THRESHOLD, "1")
		self._apply_style(ax, "Duan criterion", self.xaxis_label, self.yaxis_label)
		ax.set_yscale('log')
		ax.legend(loc = 'upper right', fontsize = self.label_size_ticks)
		if filename:
			self.save_figure(fig, filename)
		return fig
