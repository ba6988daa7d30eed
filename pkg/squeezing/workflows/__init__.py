from .workflow_entangle import run_entanglement_workflow
from .workflow_main import main, resolve_config, run_workflow
from .workflow_simulate import run_simulation_workflow
from .workflow_sweeps import run_optimize_workflow, run_sweep_workflow, run_threshold_workflow
