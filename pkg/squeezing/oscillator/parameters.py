"""
	Physical configuration of the probed resonator and the quantities derived from it.
	All rates are stored in angular units (rad/s); a value quoted as "X Hz" for γ or κ² is 2π·X here.
"""
import math
from dataclasses import dataclass
from typing import Optional

from scipy import constants

from squeezing import widgets

HBAR = constants.hbar  # 1.054571817e-34 J·s
BOLTZMANN = constants.k  # 1.380649e-23 J/K


class ConfigurationError(ValueError):
	""" Raised when a parameter violates its physical validity domain or a configuration cannot be parsed. """


@dataclass(frozen = True)
class PhysicalParams:
	omega: float  # angular frequency of the mechanical mode, rad/s
	mass: float  # effective mass, kg
	gamma: float  # bath coupling rate, rad/s
	eta: float  # measurement efficiency
	temperature: float  # bath temperature, K
	beta: float  # phase shift per unit dimensionless displacement, rad
	photon_flux: float  # probe photon flux, 1/s

	def __post_init__(self):
		validate(self)


@dataclass(frozen = True)
class DerivedParams:
	x0: float  # zero-point length, m
	p0: float  # zero-point momentum, kg·m/s
	nbar: float
	capN: float  # 2·nbar + 1
	kappa_sq_avg: float  # orbit-averaged measurement strength in use, 1/s
	kappa_sq_formula: float  # 2β²Φ, reported even when `kappa_sq_avg` was overridden
	period: float  # s


def validate(params: PhysicalParams) -> None:
	checks = [
		('omega', params.omega > 0, "must be positive"),
		('mass', params.mass > 0, "must be positive"),
		('gamma', params.gamma >= 0, "must not be negative"),
		('eta', 0 <= params.eta <= 1, "must lie in [0, 1]"),
		('temperature', params.temperature >= 0, "must not be negative"),
		('beta', params.beta >= 0, "must not be negative"),
		('photon_flux', params.photon_flux >= 0, "must not be negative"),
	]
	for name, passed, requirement in checks:
		value = getattr(params, name)
		if not math.isfinite(value):
			message = f"PhysicalParams.{name} must be finite, got {value}"
			raise ConfigurationError(message)
		if not passed:
			message = f"PhysicalParams.{name} {requirement}, got {value}"
			raise ConfigurationError(message)


def thermal_occupation(temperature: float, omega: float) -> float:
	""" Bose-Einstein occupation of a mode with angular frequency `omega` (rad/s) in a bath at `temperature` (K).
		Returns exactly 0 at zero temperature.
	"""
	if temperature < 0:
		message = f"The temperature must not be negative, got {temperature}"
		raise ConfigurationError(message)
	if omega <= 0:
		message = f"The angular frequency must be positive, got {omega}"
		raise ConfigurationError(message)
	if temperature == 0:
		return 0.0
	exponent = HBAR * omega / (BOLTZMANN * temperature)
	# expm1 keeps precision in the high-temperature limit; overflow means the mode is frozen out.
	try:
		return 1.0 / math.expm1(exponent)
	except OverflowError:
		return 0.0


def derive(params: PhysicalParams, kappa_sq_avg: Optional[float] = None) -> DerivedParams:
	"""
		Computes the zero-point scales, thermal occupation and measurement strength.
	Parameters
	----------
	params: PhysicalParams
	kappa_sq_avg: Optional[float]
		Replaces 2β²Φ as the orbit-averaged measurement strength. The figure presets pin it to 2π×197 s⁻¹.
	"""
	validate(params)
	if kappa_sq_avg is not None and (not math.isfinite(kappa_sq_avg) or kappa_sq_avg < 0):
		message = f"measurement.kappa_sq_avg must be a non-negative number, got {kappa_sq_avg}"
		raise ConfigurationError(message)

	x0 = math.sqrt(HBAR / (params.mass * params.omega))
	p0 = math.sqrt(HBAR * params.mass * params.omega)
	nbar = thermal_occupation(params.temperature, params.omega)
	kappa_sq_formula = 2 * params.beta ** 2 * params.photon_flux

	return DerivedParams(
		x0 = x0,
		p0 = p0,
		nbar = nbar,
		capN = 2 * nbar + 1,
		kappa_sq_avg = kappa_sq_formula if kappa_sq_avg is None else float(kappa_sq_avg),
		kappa_sq_formula = kappa_sq_formula,
		period = widgets.mechanical_period(params.omega)
	)
