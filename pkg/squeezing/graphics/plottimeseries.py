from pathlib import Path
from typing import Optional, Tuple, Union

import matplotlib.pyplot as plt
from loguru import logger

from squeezing import widgets
from squeezing.analysis import metrics
from squeezing.analysis.metrics import InsufficientDataError
from squeezing.oscillator.dynamics import Trajectory

# Runs longer than this many mechanical periods are drawn as per-period envelopes.
ENVELOPE_MINIMUM_PERIODS = 50


class BasePlot:
	""" Figure size, font sizes and saving shared by every plot. """

	def __init__(self, scale: int = 1):
		self.length_x = 12
		self.length_y = 8
		self.scale = scale
		if self.scale < 1:
			self.scale = 1

		self.background_color = 'white'
		self.default_color = "#333333"
		self.linewidth = 2 * self.scale
		self.reference_color = "#b22222"
		self.reference_linestyle = 'dashed'

		self.label_size_axis, self.label_size_title, self.label_size_ticks = self.set_scale(self.scale)

	@staticmethod
	def set_scale(scale: int = 1) -> Tuple[int, int, int]:
		label_size_axis = 18 * scale
		label_size_title = 24 * scale
		label_size_ticks = 14 * scale
		return label_size_axis, label_size_title, label_size_ticks

	def _initialize_plot(self) -> Tuple[plt.Figure, plt.Axes]:
		fig, ax = plt.subplots(figsize = (self.length_x * self.scale, self.length_y * self.scale))
		return fig, ax

	def _apply_style(self, ax: plt.Axes, title: str, xlabel: str, ylabel: str) -> plt.Axes:
		ax.set_xlabel(xlabel, fontsize = self.label_size_axis)
		ax.set_ylabel(ylabel, fontsize = self.label_size_axis)
		ax.set_title(title, fontsize = self.label_size_title)
		ax.set_facecolor(self.background_color)
		ax.tick_params(axis = 'both', labelsize = self.label_size_ticks)
		return ax

	def _add_reference_line(self, ax: plt.Axes, value: float, label: str):
		ax.axhline(value, color = self.reference_color, linestyle = self.reference_linestyle, linewidth = self.linewidth / 2)
		# Label the line at the right edge of the axes.
		ax.annotate(
			label,
			xy = (1.0, value),
			xycoords = ('axes fraction', 'data'),
			xytext = (4, 0),
			textcoords = 'offset points',
			va = 'center',
			color = self.reference_color,
			fontsize = self.label_size_ticks
		)

	@staticmethod
	def save_figure(fig: plt.Figure, filename: Union[str, Path]):
		""" Saves the figure as svg without a creation date, so the file only depends on the plotted data. """
		filename = Path(filename)
		try:
			fig.savefig(filename, format = 'svg', metadata = {'Date': None})
		except OSError as exception:
			message = f"Could not write '{filename}': {exception}"
			raise OSError(message) from exception
		finally:
			plt.close(fig)


class SqueezingPlot(BasePlot):
	""" 2σ(X) and 2σ(P) against time, with the squeezing threshold √2 marked. """

	def __init__(self, scale: int = 1):
		super().__init__(scale)
		self.color_x = "#1f4e79"
		self.color_p = "#7f7f7f"
		self.envelope_alpha = 0.6
		self.xaxis_label = "Time (μs)"
		self.yaxis_label = "2σ"

	def plot(self, trajectory: Trajectory, omega: float, filename: Optional[Path] = None, title: str = "Squeezing") -> plt.Figure:
		if len(trajectory) < 2:
			message = f"A plot needs at least two samples, the trajectory has {len(trajectory)}"
			raise InsufficientDataError(message)
		periods = float(trajectory.times.iloc[-1]) / widgets.mechanical_period(omega)
		envelope = self._get_envelope(trajectory, omega) if periods > ENVELOPE_MINIMUM_PERIODS else None

		fig, ax = self._initialize_plot()
		if envelope is not None:
			logger.debug(f"Drawing the per-period envelope of {periods:.0f} periods...")
			self._plot_envelope(ax, envelope)
		else:
			self._plot_curves(ax, trajectory)

		self._add_reference_line(ax, metrics.SQUEEZING_THRESHOLD, metrics.SQUEEZING_THRESHOLD_LABEL)
		self._apply_style(ax, title, self.xaxis_label, self.yaxis_label)
		ax.set_yscale('log')
		ax.legend(loc = 'upper right', fontsize = self.label_size_ticks)
		if filename:
			self.save_figure(fig, filename)
		return fig

	@staticmethod
	def _get_envelope(trajectory: Trajectory, omega: float) -> Optional[metrics.Envelope]:
		try:
			return metrics.envelope(trajectory, omega)
		except InsufficientDataError as exception:
			# Too few samples per period for an envelope.
			logger.warning(f"Drawing the raw curves instead of the envelope: {exception}")
			return None

	def _plot_curves(self, ax: plt.Axes, trajectory: Trajectory):
		table = metrics.squeezing_table(trajectory)
		time = table['t_s'] * 1e6
		ax.plot(time, table['two_sigma_x'], color = self.color_x, linewidth = self.linewidth, label = "2σ(X)")
		ax.plot(time, table['two_sigma_p'], color = self.color_p, linewidth = self.linewidth, label = "2σ(P)")

	def _plot_envelope(self, ax: plt.Axes, envelope: metrics.Envelope):
		table = envelope.table
		time = (table['t_start'] + table['t_end']) / 2 * 1e6
		ax.fill_between(
			time, table['two_sigma_x_min'], table['two_sigma_x_max'],
			color = self.color_x, alpha = self.envelope_alpha, linewidth = 0, label = "2σ(X)"
		)
		ax.fill_between(
			time, table['two_sigma_p_min'], table['two_sigma_p_max'],
			color = self.color_p, alpha = self.envelope_alpha, linewidth = 0, label = "2σ(P)"
		)


def emit_plot(trajectory: Trajectory, omega: float, filename: Union[str, Path], title: str = "Squeezing") -> Path:
	""" Draws the squeezing figure of `trajectory` into an svg file. """
	SqueezingPlot().plot(trajectory, omega, Path(filename), title)
	return Path(filename)
