import math
from dataclasses import replace

import pytest

from squeezing.dataio.configuration import RunConfig
from squeezing.oscillator.parameters import DerivedParams, PhysicalParams, derive

OMEGA = 2 * math.pi * 1e6
PERIOD = 1e-6
KAPPA_SQ_FIGURES = 2 * math.pi * 197


@pytest.fixture
def physical() -> PhysicalParams:
	""" The cantilever of the figure presets at 0 K. """
	return PhysicalParams(
		omega = OMEGA,
		mass = 1.1e-11,
		gamma = 2 * math.pi * 10,
		eta = 1.0,
		temperature = 0.0,
		beta = 6.5e-7,
		photon_flux = 2.92e15
	)


@pytest.fixture
def derived(physical) -> DerivedParams:
	return derive(physical, KAPPA_SQ_FIGURES)


@pytest.fixture
def quick_config(tmp_path) -> RunConfig:
	""" A few mechanical periods with a coarse step, so a full run takes well under a second. """
	config = RunConfig(
		kappa_sq_avg = KAPPA_SQ_FIGURES,
		duration = 4e-6,
		steps_per_period = 200,
		output_folder = str(tmp_path / "output"),
		output_name = "quick"
	)
	return config.resolve()


@pytest.fixture
def strong_config(quick_config) -> RunConfig:
	""" Measurement strong enough to squeeze within a few periods. """
	return replace(quick_config, kappa_sq_avg = 2e6, warmup_periods = 0.0).resolve()
