from dataclasses import dataclass
from typing import Any, Dict, Optional

from squeezing.analysis.metrics import DUAN_THRESHOLD, Envelope, SimulationSummary
from squeezing.analysis.twomode import TwoModeTrajectory
from squeezing.dataio.configuration import RunConfig
from squeezing.oscillator.dynamics import Trajectory


@dataclass
class DataWorkflowBasic:
	# Used to organize the output from a workflow.
	# Should only cover relevant data about the run as a whole.
	version: str  # The version of the scripts
	command: str  # The subcommand that was run.
	config: RunConfig  # The resolved configuration.

	def to_dict(self) -> Dict[str, Any]:
		return {
			'version': self.version,
			'command': self.command,
			'preset':  self.config.preset
		}


@dataclass
class DataSimulation:
	trajectory: Trajectory
	summary: SimulationSummary
	# Only available when the run spans at least one mechanical period.
	envelope: Optional[Envelope]

	def to_dict(self) -> Dict[str, Any]:
		data = self.summary.to_dict()
		if self.envelope is not None:
			data['periods'] = len(self.envelope.table)
		return data


@dataclass
class DataEntanglement:
	trajectory: TwoModeTrajectory
	minus_phase: float

	def to_dict(self) -> Dict[str, Any]:
		return {
			'first_entangled_time': self.trajectory.first_entangled_time,
			'final_duan_sum':       self.trajectory.final_duan_sum,
			'min_duan_sum':         self.trajectory.min_duan_sum,
			'entangled':            self.trajectory.final_duan_sum < DUAN_THRESHOLD,
			'minus_phase':          self.minus_phase
		}
