"""
	The figure presets take a few seconds each, so every preset trajectory is simulated once per session and shared.
"""
from typing import Dict

import pytest

from squeezing.analysis import metrics
from squeezing.dataio import presets
from squeezing.oscillator.dynamics import Trajectory
from squeezing.simulation import simulate


class PresetRuns:
	def __init__(self):
		self.trajectories: Dict[str, Trajectory] = dict()

	def trajectory(self, name: str) -> Trajectory:
		if name not in self.trajectories:
			self.trajectories[name] = simulate(presets.get_preset(name))
		return self.trajectories[name]

	def summary(self, name: str) -> metrics.SimulationSummary:
		return metrics.summarize(self.trajectory(name), presets.get_preset(name).omega)


@pytest.fixture(scope = "session")
def preset_runs() -> PresetRuns:
	return PresetRuns()
