"""Cauchy-problem solvers: superposition quadrature, closed-form eigenstate
evolution, the gauge-transformed solution, and the particular solutions of
the cubic-type nonlinear equations.

The evolved-eigenstate closed form is assembled directly from the Gauss
transform of a Hermite polynomial,

    integral exp(-L^2 (y-c)^2) H_n(a y) dy
        = sqrt(pi)/L^(n+1) (L^2-a^2)^(n/2) H_n(L a c / sqrt(L^2-a^2)),

keeping the two square roots paired: the product (s/L)^n H_n(.../s) with
s = sqrt(L^2 - a^2) is invariant under s -> -s, so principal branches give
the continuous continuation from t -> 0+ without any phase bookkeeping.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate as _integrate

from . import kernelcoeffs as kc
from .errors import DomainError, ParameterError, RangeError, SingularOriginError
from .grids import GridWaveFunction
from .kernelcoeffs import EquationVariant, QuadraticPhase
from .propagator import OscillatorConfig, free_particle_green, greens, phase_kernel
from .specfun import hermite

#: eigenstate order cap; the log-domain normalization is exact well beyond
#: this, but the Hermite recurrence accuracy degrades slowly with n
N_MAX_EIGENSTATE = 60


def eigenstate(n: int, omega: float, m: float = 1.0, hbar: float = 1.0, x=0.0):
    """Stationary oscillator eigenstate at its t = 0 phase.

        (m w / pi hbar)^(1/4) / sqrt(2^n n!) exp(-m w x^2 / 2 hbar)
            * H_n(sqrt(m w / hbar) x)

    normalized to unit L^2 norm; the 1/sqrt(2^n n!) factor is evaluated in
    the log domain.
    """
    if n < 0:
        raise DomainError("eigenstate: n must be nonnegative")
    if n > N_MAX_EIGENSTATE:
        raise RangeError(f"eigenstate: n={n} exceeds the supported maximum {N_MAX_EIGENSTATE}")
    if omega <= 0 or m <= 0 or hbar <= 0:
        raise DomainError("eigenstate: omega, m, hbar must be positive")
    x = np.asarray(x, dtype=float)
    xi = np.sqrt(m * omega / hbar) * x
    lognorm = -0.5 * (n * math.log(2.0) + math.lgamma(n + 1))
    pref = (m * omega / (math.pi * hbar)) ** 0.25 * math.exp(lognorm)
    return pref * np.exp(-0.5 * xi * xi) * hermite(n, xi)


def eigenstate_grid(
    n: int,
    omega: float,
    m: float = 1.0,
    hbar: float = 1.0,
    x_min: float = -12.0,
    x_max: float = 12.0,
    n_points: int = 1024,
    t: float = 0.0,
) -> GridWaveFunction:
    return GridWaveFunction.from_callable(
        lambda x: eigenstate(n, omega, m, hbar, x), x_min, x_max, n_points, t=t
    )


def solve_cauchy(
    variant: EquationVariant,
    phi: GridWaveFunction,
    t: float,
    cfg: OscillatorConfig | None = None,
    mu=None,
) -> GridWaveFunction:
    """psi(x, t) = integral G(x, y, t) phi(y) dy over the truncated grid.

    phi must be given at t = 0 and decay below 1e-10 at the grid edges; the
    quadrature is the end-corrected panel rule, superalgebraically accurate
    for decaying integrands.  cfg selects the oscillator kernels; mu (a
    sampled classical solution) switches to the general-profile route.
    """
    variant = EquationVariant(variant)
    if phi.t != 0.0:
        raise DomainError("solve_cauchy: the initial state must be at t = 0")
    phi.require_boundary_decay()
    x = phi.x
    xg, yg = np.meshgrid(x, x)  # [j, i]: y_j, x_i
    if variant in kc.AIRY_VARIANTS:
        gmat = greens(variant, xg.T, yg.T, t)
    elif variant in (EquationVariant.OSCILLATOR_CHIRP, EquationVariant.OSCILLATOR_GENERAL):
        if cfg is None:
            raise ParameterError(f"solve_cauchy: {variant.value} needs an OscillatorConfig")
        if variant is EquationVariant.OSCILLATOR_GENERAL and mu is None:
            mu = cfg.classical_solution()
        phase = cfg.scaled_phase(t, mu=mu)
        gmat = phase_kernel(phase, xg.T, yg.T, phase_scale=cfg.m / (2.0 * cfg.hbar))
    else:
        raise ParameterError(f"solve_cauchy: unsupported variant {variant}")
    values = gmat @ (phi.weights * phi.values)
    return phi.with_values(values, t=t)


def evolve_eigenstate_analytic(
    n: int, t: float, cfg: OscillatorConfig, mu=None, phase: QuadraticPhase | None = None
):
    """Closed-form evolution of eigenstate n of the initial frequency.

    Returns a vectorized sampler psi(x).  `phase` may supply precomputed
    scaled coefficients (m/2hbar normalization); otherwise they come from
    cfg (Airy branch for chirps, classical solution `mu` for general
    profiles).  The t -> 0+ limit reproduces the initial eigenstate on the
    principal branches.
    """
    if n < 0 or n > N_MAX_EIGENSTATE:
        raise RangeError(f"evolve_eigenstate_analytic: n={n} out of range")
    if phase is None:
        phase = cfg.scaled_phase(t, mu=mu)
    m, hbar, w0 = cfg.m, cfg.hbar, cfg.omega0
    mu_g, alpha, beta, gamma = phase.mu, phase.alpha, phase.beta, phase.gamma

    lam = cmath.sqrt(0.5 * m / hbar * (w0 - 1j * gamma))  # Re > 0
    a = math.sqrt(m * w0 / hbar)
    s = cmath.sqrt(lam * lam - a * a)
    q = 1j * m * a * beta / (4.0 * hbar * lam * s)
    big_lambda = m * beta * beta / (8.0 * hbar * (w0 - 1j * gamma)) - 0.5j * m / hbar * alpha
    lognorm = -0.5 * (n * math.log(2.0) + math.lgamma(n + 1))
    pref = (
        (m * w0 / (math.pi * hbar)) ** 0.25
        * math.exp(lognorm)
        / np.sqrt(2j * np.pi * mu_g)
        * math.sqrt(math.pi)
        / lam
        * (s / lam) ** n
    )

    def sampler(x):
        x = np.asarray(x, dtype=float)
        return pref * np.exp(-big_lambda * x * x) * hermite(n, q * x)

    return sampler


def gauge_solve(phi: GridWaveFunction, t: float) -> GridWaveFunction:
    """Solution of the gauge-transformed equation: exp(-i x^2/t) times the
    plain ramp-potential solution; satisfies the modified initial condition
    exp(i x^2/t) psi -> phi as t -> 0+."""
    if not t > 0.0:
        raise SingularOriginError("gauge_solve: defined for t > 0 only")
    plain = solve_cauchy(EquationVariant.INCREASING, phi, t)
    gaugefactor = np.exp(-1j * plain.x**2 / t)
    return plain.with_values(gaugefactor * plain.values)


@dataclass(frozen=True)
class NlsParams:
    """Cubic-type nonlinearity h(t) |psi|^(2s) psi with h = coupling * mu'(t)."""

    s: float
    coupling: float
    kappa0: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if self.s < 0:
            raise ParameterError("NlsParams: s must be nonnegative")


def _kappa_closed(params: NlsParams, mu_t: float, mu_0: float) -> float:
    if mu_t <= 0.0 or mu_0 <= 0.0:
        raise ParameterError("kappa closed form needs mu > 0 at both endpoints")
    if params.s == 1.0:
        return params.kappa0 - params.coupling * math.log(mu_t / mu_0)
    p = 1.0 - params.s
    return params.kappa0 - params.coupling / p * (mu_t**p - mu_0**p)


def nls_kappa(
    params: NlsParams, mu_fn, dmu_fn, t: float, method: str = "closed"
) -> float:
    """kappa(t) = kappa(0) - integral_0^t h(s)/mu(s)^s ds for h = coupling * mu'.

    method="closed" uses the exact antiderivative (log for s = 1, power
    otherwise); method="quadrature" integrates adaptively and is the
    independent cross-check route.
    """
    samples = np.linspace(0.0, t, 257)
    mus = np.array([mu_fn(u) for u in samples])
    if np.any(mus <= 0.0):
        raise ParameterError("nls_kappa: mu must stay positive on [0, t]")
    if method == "closed":
        return _kappa_closed(params, mu_fn(t), mu_fn(0.0))
    if method == "quadrature":
        val, _ = _integrate.quad(
            lambda u: params.coupling * dmu_fn(u) / mu_fn(u) ** params.s,
            0.0,
            t,
            epsabs=1e-12,
            epsrel=1e-12,
            limit=200,
        )
        return params.kappa0 - val
    raise ParameterError(f"nls_kappa: unknown method {method!r}")


def nls_solution(
    params: NlsParams,
    variant: EquationVariant,
    c1: float,
    c2: float,
    beta0: float,
    gamma0: float,
    x,
    y,
    t: float,
):
    """Particular solution exp(i phi)/sqrt(mu) exp(i(alpha x^2 + beta x y +
    gamma y^2 + kappa(t))) of the nonlinear ramp equation.

    The quadratic-phase coefficients are the linear-equation general solution;
    kappa carries the nonlinearity and |psi|^2 = 1/mu exactly.
    """
    phase = kc.general_coeffs(variant, c1, c2, beta0, gamma0, t)
    phase0 = kc.general_coeffs(variant, c1, c2, beta0, gamma0, 0.0)
    kappa = _kappa_closed(params, phase.mu, phase0.mu)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    quad = phase.alpha * x * x + phase.beta * x * y + phase.gamma * y * y
    return cmath.exp(1j * params.phi) / math.sqrt(phase.mu) * np.exp(1j * (quad + kappa))
