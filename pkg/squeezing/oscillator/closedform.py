"""
	Analytic solutions of the covariance equations in two limits. Used as oracles for the integrator.
"""
import math

from squeezing.oscillator.dynamics import CovarianceState

# a12 and a21 must agree to this relative tolerance for the symmetric solutions below to apply.
SYMMETRY_TOLERANCE = 1e-12


def _check_symmetric(state: CovarianceState):
	scale = max(abs(state.a12), abs(state.a21), 1.0)
	if abs(state.a12 - state.a21) > SYMMETRY_TOLERANCE * scale:
		message = f"The closed forms require a12 == a21, got a12 = {state.a12}, a21 = {state.a21}"
		raise ValueError(message)


def free_evolution_closed_form(initial: CovarianceState, omega: float, gamma: float, capN: float, t: float) -> CovarianceState:
	"""
		Solution without measurement (κ = 0). With u = a11 + a22, v = a11 − a22, w = 2·a12:
			u(t) = 2N + (u0 − 2N)·exp(−γt)
			(v, w) rotate at 2ω and decay at γ.
		The returned state is at time initial.t + t.
	"""
	_check_symmetric(initial)
	decay = math.exp(-gamma * t)
	u0 = initial.a11 + initial.a22
	v0 = initial.a11 - initial.a22
	w0 = 2 * initial.a12
	angle = 2 * omega * t
	cosine, sine = math.cos(angle), math.sin(angle)

	u = 2 * capN + (u0 - 2 * capN) * decay
	v = decay * (v0 * cosine + w0 * sine)
	w = decay * (-v0 * sine + w0 * cosine)
	return CovarianceState(t = initial.t + t, a11 = (u + v) / 2, a12 = w / 2, a21 = w / 2, a22 = (u - v) / 2)


def measurement_only_closed_form(initial: CovarianceState, eta: float, kappa_sq: float, tau: float) -> CovarianceState:
	"""
		Solution for ω = γ = 0 under a constant measurement strength. With c = ηκ²·a11(0):
			a11(τ) = a11(0) / (1 + cτ)
			a12(τ) = a12(0) / (1 + cτ)
			a22(τ) = a22(0) + κ²τ − ηκ²·a12(0)²·τ / (1 + cτ)
	"""
	_check_symmetric(initial)
	rate = eta * kappa_sq * initial.a11
	denominator = 1 + rate * tau
	a12 = initial.a12 / denominator
	a22 = initial.a22 + kappa_sq * tau - eta * kappa_sq * initial.a12 ** 2 * tau / denominator
	return CovarianceState(t = initial.t + tau, a11 = initial.a11 / denominator, a12 = a12, a21 = a12, a22 = a22)
