"""Pointwise Green functions and Gaussian kernels for all equation variants.

Every kernel has the shape exp(i(alpha x^2 + beta x y + gamma y^2 + ...)) over
sqrt(2 pi i mu), with the coefficients supplied by `kernelcoeffs`.  The square
root uses the principal branch: on the pre-caustic domain mu keeps one sign
(positive for the coordinate variants, negative for the increasing momentum
branch), so the principal branch is the continuous continuation from the
t -> 0+ delta family and no extra phase bookkeeping is needed; evaluation at
or beyond a caustic raises instead of crossing the branch cut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernelcoeffs as kc
from .errors import DomainError, ParameterError
from .kernelcoeffs import EquationVariant, QuadraticPhase
from .oracle import ClassicalSolution, FrequencyProfile

_SQRT_2PI_I = np.sqrt(2.0j * np.pi)  # principal


def phase_kernel(phase: QuadraticPhase, x, y, phase_scale: float = 1.0) -> np.ndarray:
    """exp(i s (alpha x^2 + beta x y + gamma y^2)) / sqrt(2 pi i mu).

    s = `phase_scale` multiplies the quadratic form only (m/2hbar for the
    physical oscillator kernels, 1 for the dimensionless variants); mu is
    already normalized accordingly by the coefficient constructors.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    quad = phase.alpha * x * x + phase.beta * x * y + phase.gamma * y * y
    return np.exp(1j * phase_scale * quad) / np.sqrt(2j * np.pi * phase.mu)


@dataclass(frozen=True)
class OscillatorConfig:
    """Oscillator with frequency moving from omega0 to omega1 over (0, T).

    The default transition profile is the linear-in-time ramp of omega^2
    between omega0^2 and omega1^2; it is exactly the Airy-solvable chirp with

        omega = ((omega1^2 - omega0^2)/T)^(1/3),   delta = omega0^2 / omega^2,

    the effective squared frequency being omega^2 (omega t + delta).  A custom
    `profile` switches the config to the general (numerically integrated)
    case.  omega is negative for a downward chirp (omega1 < omega0).
    """

    omega0: float
    omega1: float
    T: float
    m: float = 1.0
    hbar: float = 1.0
    profile: FrequencyProfile | None = None

    def __post_init__(self):
        if self.m <= 0 or self.hbar <= 0 or self.T <= 0:
            raise ParameterError("OscillatorConfig: m, hbar, T must be positive")
        if self.omega0 <= 0 or self.omega1 <= 0:
            raise ParameterError("OscillatorConfig: frequencies must be positive")
        if self.profile is None and self.omega1 == self.omega0:
            raise ParameterError(
                "OscillatorConfig: chirp parameters need omega1 != omega0 "
                "(constant frequency has no Airy chirp; use a constant profile)"
            )
        if self.profile is None:
            # continuity of the effective frequency at both ends
            w2, d = self.omega**2, self.delta
            assert abs(w2 * d - self.omega0**2) <= 1e-12 * self.omega0**2
            assert abs(w2 * (self.omega * self.T + d) - self.omega1**2) <= 1e-12 * self.omega1**2

    @property
    def is_chirp(self) -> bool:
        return self.profile is None

    @property
    def omega(self) -> float:
        v = (self.omega1**2 - self.omega0**2) / self.T
        return math.copysign(abs(v) ** (1.0 / 3.0), v)

    @property
    def delta(self) -> float:
        return self.omega0**2 / self.omega**2

    @property
    def epsilon(self) -> float:
        """Coordinate scaling sqrt(m omega / 2 hbar); upward chirps only."""
        if self.omega <= 0:
            raise ParameterError("epsilon is defined for upward chirps (omega > 0)")
        return math.sqrt(self.m * self.omega / (2.0 * self.hbar))

    def tau(self, t: float) -> float:
        return self.omega * t + self.delta

    def frequency_profile(self) -> FrequencyProfile:
        if self.profile is not None:
            return self.profile
        return FrequencyProfile.linear_chirp(self.omega0, self.omega1, self.T)

    def scaled_phase(self, t: float, mu: ClassicalSolution | None = None) -> QuadraticPhase:
        """Kernel coefficients in the m/2hbar normalization at time t.

        Chirp configs use the closed Airy branch; general configs (or an
        explicit sampled classical solution) use the numerical route.
        """
        if mu is not None:
            return kc.general_oscillator_coeffs(mu, t, m=self.m, hbar=self.hbar)
        if not self.is_chirp:
            raise ParameterError("general-profile config needs a sampled classical solution")
        return kc.chirp_scaled_coeffs(t, self.m, self.hbar, self.omega, self.delta)

    def classical_solution(self, t_final: float | None = None) -> ClassicalSolution:
        """Integrate mu'' + omega^2(t) mu = 0 with mu(0)=0, mu'(0)=hbar/m."""
        from .oracle import integrate_classical

        t_end = self.T if t_final is None else t_final
        grid = np.linspace(0.0, t_end, max(9, int(64 * t_end) + 1))
        return integrate_classical(self.frequency_profile(), 0.0, self.hbar / self.m, grid)


def greens(variant: EquationVariant, x, y, t: float) -> np.ndarray:
    """Green function of a dimensionless variant at t > 0 (vectorized in x, y).

    increasing:  exp(i(a' x^2 - 2 x y + b y^2)/a) / sqrt(pi i a)  with the
    pair at t; the other variants substitute their own branch coefficients.
    """
    phase = kc.green_coeffs(variant, t)
    return phase_kernel(phase, x, y)


def kernel_K(
    variant: EquationVariant,
    c1: float,
    c2: float,
    beta0: float,
    gamma0: float,
    x,
    y,
    t: float,
) -> np.ndarray:
    """General Gaussian kernel built on the regular solution family."""
    phase = kc.general_coeffs(variant, c1, c2, beta0, gamma0, t)
    return phase_kernel(phase, x, y)


def free_particle_green(x, y, t: float, m: float = 1.0, hbar: float = 1.0) -> np.ndarray:
    """sqrt(m/(2 pi i hbar t)) exp(i m (x-y)^2 / (2 hbar t))."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not t > 0:
        raise DomainError("free_particle_green: t must be positive")
    return np.sqrt(m / (2j * np.pi * hbar * t)) * np.exp(
        1j * m * (x - y) ** 2 / (2.0 * hbar * t)
    )


def oscillator_green(x, y, t: float, cfg: OscillatorConfig) -> np.ndarray:
    """Transition Green function of the chirped oscillator on 0 < t <= T.

    Equals sqrt(m omega/(4 pi i hbar mu(tau))) exp(i (m omega/2 hbar)
    (alpha x^2 + beta x y + gamma y^2)) with the Airy-pair coefficients at
    tau = omega t + delta; evaluated through the rescaled branch so that the
    principal square root is continuous for either chirp direction.
    """
    if not 0 < t <= cfg.T:
        raise DomainError(f"oscillator_green: t={t!r} outside (0, T={cfg.T}]")
    if not cfg.is_chirp:
        raise ParameterError("oscillator_green needs a chirp config; use general_green")
    phase = cfg.scaled_phase(t)
    return phase_kernel(phase, x, y, phase_scale=cfg.m / (2.0 * cfg.hbar))


def general_green(
    x, y, t: float, cfg: OscillatorConfig, mu: ClassicalSolution
) -> np.ndarray:
    """Transition Green function for an arbitrary frequency profile.

    `mu` must solve the classical equation for cfg's profile with mu(0) = 0,
    mu'(0) = hbar/m.
    """
    if not 0 < t <= cfg.T:
        raise DomainError(f"general_green: t={t!r} outside (0, T={cfg.T}]")
    if abs(mu.mu(mu.t0)) > 1e-12 or abs(mu.dmu(mu.t0) - cfg.hbar / cfg.m) > 1e-9:
        raise ParameterError(
            "general_green: classical solution must satisfy mu(0)=0, mu'(0)=hbar/m"
        )
    phase = cfg.scaled_phase(t, mu=mu)
    return phase_kernel(phase, x, y, phase_scale=cfg.m / (2.0 * cfg.hbar))


def batch_evaluate(kernel, xs, ys, ts) -> np.ndarray:
    """Dense evaluation: out[k, j, i] = kernel(x_i, y_j, t_k), x fastest."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    out = np.empty((len(ts), len(ys), len(xs)), dtype=complex)
    xg, yg = np.meshgrid(xs, ys)  # shape (ny, nx)
    for k, t in enumerate(ts):
        out[k] = kernel(xg, yg, float(t))
    return out
