"""Independent numerical ground truth for the closed forms elsewhere in the
package: classical-trajectory integration, the gamma quadrature, a
norm-conserving Schrodinger stepper, and oscillatory-integral quadrature.

Nothing here relies on the Airy or hypergeometric closed forms; cross-checks
between this module and the analytic ones are therefore genuine dual-route
validations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate as _integrate
from scipy import linalg as _linalg

from .errors import (
    DomainError,
    ParameterError,
    SingularIntegrandError,
    StiffnessError,
    TruncationDomainError,
)
from .grids import GridWaveFunction, gregory_weights, match_grids

# ---------------------------------------------------------------------------
# frequency profiles


@dataclass(frozen=True)
class FrequencyProfile:
    """omega^2(t) for the classical oscillator equation mu'' + omega^2(t) mu = 0.

    Negative values are allowed (inverted regimes).  Piecewise/tabulated
    profiles interpolate linearly between knots, so they are continuous by
    construction; outside the knot span they clamp to the end values.
    """

    kind: str
    knots: tuple = ()
    values: tuple = ()
    omega0: float = 0.0
    omega1: float = 0.0
    duration: float = 0.0

    @classmethod
    def constant(cls, omega: float) -> "FrequencyProfile":
        return cls(kind="constant", omega0=float(omega))

    @classmethod
    def linear_chirp(cls, omega0: float, omega1: float, duration: float) -> "FrequencyProfile":
        """omega^2 ramps linearly from omega0^2 (t<=0) to omega1^2 (t>=duration)."""
        if duration <= 0:
            raise ParameterError("linear_chirp: duration must be positive")
        if omega0 <= 0 or omega1 <= 0:
            raise ParameterError("linear_chirp: frequencies must be positive")
        return cls(
            kind="linear_chirp",
            omega0=float(omega0),
            omega1=float(omega1),
            duration=float(duration),
        )

    @classmethod
    def piecewise(cls, knots, values) -> "FrequencyProfile":
        knots = tuple(float(t) for t in knots)
        values = tuple(float(v) for v in values)
        if len(knots) != len(values) or len(knots) < 2:
            raise ParameterError("piecewise: need matching knots/values, at least two")
        if any(b <= a for a, b in zip(knots, knots[1:])):
            raise ParameterError("piecewise: knots must be strictly increasing")
        return cls(kind="piecewise", knots=knots, values=values)

    @classmethod
    def tabulated(cls, knots, values) -> "FrequencyProfile":
        p = cls.piecewise(knots, values)
        return cls(kind="tabulated", knots=p.knots, values=p.values)

    @classmethod
    def from_csv(cls, path) -> "FrequencyProfile":
        """Two columns t, omega^2 with strictly increasing t; '#' comments allowed."""
        knots, values = [], []
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#") or line.lower().startswith("t,"):
                    continue
                parts = line.split(",")
                if len(parts) != 2:
                    raise ParameterError(f"profile CSV: expected 't,omega_sq', got {line!r}")
                knots.append(float(parts[0]))
                values.append(float(parts[1]))
        return cls.tabulated(knots, values)

    def omega_sq(self, t: float):
        """omega^2 at time t (vectorizes over numpy arrays)."""
        if self.kind == "constant":
            return self.omega0**2 * np.ones_like(np.asarray(t, dtype=float)) if np.ndim(t) else self.omega0**2
        if self.kind == "linear_chirp":
            w0sq, w1sq = self.omega0**2, self.omega1**2
            frac = np.clip(np.asarray(t, dtype=float) / self.duration, 0.0, 1.0)
            out = w0sq + (w1sq - w0sq) * frac
            return out if np.ndim(t) else float(out)
        out = np.interp(np.asarray(t, dtype=float), self.knots, self.values)
        return out if np.ndim(t) else float(out)

    def max_abs_omega(self, t_lo: float, t_hi: float) -> float:
        ts = np.linspace(t_lo, t_hi, 257)
        return float(np.sqrt(np.max(np.abs(self.omega_sq(ts)))))


# ---------------------------------------------------------------------------
# classical trajectory


@dataclass(frozen=True)
class ClassicalSolution:
    """Densely sampled solution of mu'' + omega^2(t) mu = 0 with derivatives.

    Evaluation between samples uses cubic Hermite interpolation on the
    integration grid, which is fine enough that the interpolation error is
    below the integrator's own error.
    """

    profile: FrequencyProfile
    ts: np.ndarray
    mus: np.ndarray
    dmus: np.ndarray

    def __post_init__(self):
        # mu'' from the equation of motion, for Hermite interpolation of mu'
        object.__setattr__(
            self, "_ddmus", -np.asarray(self.profile.omega_sq(self.ts)) * self.mus
        )

    @property
    def t0(self) -> float:
        return float(self.ts[0])

    @property
    def t_end(self) -> float:
        return float(self.ts[-1])

    def amplitude(self) -> float:
        return float(np.max(np.abs(self.mus)))

    def _hermite(self, t, ys, dys):
        t = np.asarray(t, dtype=float)
        idx = np.clip(np.searchsorted(self.ts, t) - 1, 0, len(self.ts) - 2)
        t0, t1 = self.ts[idx], self.ts[idx + 1]
        h = t1 - t0
        s = (t - t0) / h
        y0, y1 = ys[idx], ys[idx + 1]
        d0, d1 = dys[idx] * h, dys[idx + 1] * h
        h00 = (1 + 2 * s) * (1 - s) ** 2
        h10 = s * (1 - s) ** 2
        h01 = s * s * (3 - 2 * s)
        h11 = s * s * (s - 1)
        return h00 * y0 + h10 * d0 + h01 * y1 + h11 * d1

    def mu(self, t):
        out = self._hermite(t, self.mus, self.dmus)
        return out if np.ndim(t) else float(out)

    def dmu(self, t):
        out = self._hermite(t, self.dmus, self._ddmus)
        return out if np.ndim(t) else float(out)

    def to_csv(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("t,mu,dmu\n")
            for t, m, d in zip(self.ts, self.mus, self.dmus):
                fh.write(f"{float(t)!r},{float(m)!r},{float(d)!r}\n")


def integrate_classical(
    profile: FrequencyProfile,
    mu0: float,
    dmu0: float,
    t_grid,
    steps_per_unit: int = 4000,
) -> ClassicalSolution:
    """Integrate mu'' + omega^2(t) mu = 0 by fixed-step fourth-order Runge-Kutta.

    The step resolves max|omega| and targets ~1e-13 global error at desk
    scale; t_grid must be increasing and is a subset of the returned sample
    grid, so values at those times are exact integrator output.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or len(t_grid) < 2:
        raise DomainError("integrate_classical: t_grid needs at least two points")
    if np.any(np.diff(t_grid) <= 0):
        raise DomainError("integrate_classical: t_grid must be strictly increasing")

    span = float(t_grid[-1] - t_grid[0])
    wmax = profile.max_abs_omega(float(t_grid[0]), float(t_grid[-1]))
    per_unit = steps_per_unit * max(1.0, wmax)
    ts = [float(t_grid[0])]
    mus = [float(mu0)]
    dmus = [float(dmu0)]

    def rhs(t, y):
        return np.array([y[1], -profile.omega_sq(t) * y[0]])

    y = np.array([mu0, dmu0], dtype=float)
    for a, b in zip(t_grid[:-1], t_grid[1:]):
        n_sub = max(1, int(math.ceil((b - a) * per_unit)))
        h = (b - a) / n_sub
        if h < 1e-14 * max(1.0, span):
            raise StiffnessError(f"integrate_classical: step underflow near t={a!r}")
        t = a
        for _ in range(n_sub):
            k1 = rhs(t, y)
            k2 = rhs(t + h / 2, y + h / 2 * k1)
            k3 = rhs(t + h / 2, y + h / 2 * k2)
            k4 = rhs(t + h, y + h * k3)
            y = y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
            t += h
            ts.append(t)
            mus.append(float(y[0]))
            dmus.append(float(y[1]))
        # land exactly on the requested node
        ts[-1] = float(b)

    return ClassicalSolution(
        profile=profile,
        ts=np.array(ts),
        mus=np.array(mus),
        dmus=np.array(dmus),
    )


def wronskian(sol_a: ClassicalSolution, sol_b: ClassicalSolution, t) -> float:
    """mu_a mu_b' - mu_a' mu_b at t; constant in t for a shared profile."""
    return sol_a.mu(t) * sol_b.dmu(t) - sol_a.dmu(t) * sol_b.mu(t)


def gamma_quadrature(
    sol: ClassicalSolution, t: float, m: float = 1.0, hbar: float = 1.0
) -> float:
    """gamma(t) = (hbar/m)^2 (1/(mu mu') - int_0^t omega^2(s)/mu'(s)^2 ds).

    The integrand is regular at the lower end (mu'(0) = hbar/m); mu' must not
    vanish anywhere on the interval, and mu mu' must be nonzero at t.
    """
    t0 = sol.t0
    if not t > t0:
        raise DomainError(f"gamma_quadrature: t must exceed the initial time {t0}")
    mask = (sol.ts >= t0) & (sol.ts <= t)
    dscale = float(np.max(np.abs(sol.dmus[mask]))) if np.any(mask) else abs(sol.dmu(t))
    lo = float(np.min(np.abs(sol.dmus[mask]))) if np.any(mask) else abs(sol.dmu(t))
    signs = np.sign(sol.dmus[mask])
    if lo < 1e-9 * max(1.0, dscale) or np.any(signs[1:] * signs[:-1] < 0):
        raise SingularIntegrandError(
            f"gamma_quadrature: mu' vanishes inside ({t0}, {t}]; the integral "
            "of omega^2/mu'^2 is not validated across turning points"
        )
    muv, dmuv = sol.mu(t), sol.dmu(t)
    if abs(muv * dmuv) < 1e-300:
        raise SingularIntegrandError("gamma_quadrature: mu mu' vanishes at t")

    def integrand(s):
        return sol.profile.omega_sq(s) / sol.dmu(s) ** 2

    # the tolerance is tight because downstream residual checks difference
    # gamma values at h = 1e-5; quadrature noise enters as err/2h
    val, err = _integrate.quad(integrand, t0, t, epsabs=1e-13, epsrel=1e-13, limit=300)
    if err > 1e-9:
        raise SingularIntegrandError(
            f"gamma_quadrature: quadrature error estimate {err:.2e} too large"
        )
    return (hbar / m) ** 2 * (1.0 / (muv * dmuv) - val)


# ---------------------------------------------------------------------------
# norm-conserving Schrodinger stepper


def _hamiltonian_bands(x, dx, m, hbar, omega_sq_t, order):
    """Symmetric banded H = -(hbar^2/2m) D2 + (m omega^2/2) x^2, diagonals up."""
    n = len(x)
    kin = hbar * hbar / (2.0 * m * dx * dx)
    if order == 2:
        bands = np.zeros((3, n))
        bands[0, 1:] = -kin  # upper
        bands[1] = 2.0 * kin
        bands[2, :-1] = -kin  # lower
        u = 1
    elif order == 4:
        bands = np.zeros((5, n))
        bands[0, 2:] = kin / 12.0
        bands[1, 1:] = -16.0 * kin / 12.0
        bands[2] = 30.0 * kin / 12.0
        bands[3, :-1] = -16.0 * kin / 12.0
        bands[4, :-2] = kin / 12.0
        u = 2
    else:
        raise ParameterError("spatial order must be 2 or 4")
    bands[u] += 0.5 * m * omega_sq_t * x * x
    return bands, u


def _banded_matvec(bands, u, v):
    out = bands[u] * v
    for k in range(1, u + 1):
        out[:-k] += bands[u - k, k:] * v[k:]
        out[k:] += bands[u + k, :-k] * v[:-k]
    return out


def unitary_stepper(
    profile: FrequencyProfile,
    psi0: GridWaveFunction,
    t_final: float,
    dt: float,
    m: float = 1.0,
    hbar: float = 1.0,
    spatial_order: int = 4,
    check_every: int = 200,
) -> GridWaveFunction:
    """Cayley-form implicit stepping of i hbar psi_t = H(t) psi.

        (1 + i dt H_mid / 2 hbar) psi_(k+1) = (1 - i dt H_mid / 2 hbar) psi_k

    with H evaluated at the midpoint time.  The discrete evolution operator is
    exactly unitary (up to the linear-solve round-off) because H is Hermitian;
    the scheme is second-order accurate in dt.  Dirichlet boundaries: the
    initial state must stay numerically supported inside the grid.
    """
    t0 = psi0.t
    if t_final <= t0:
        raise DomainError("unitary_stepper: t_final must exceed the initial time")
    wmax = profile.max_abs_omega(t0, t_final)
    if dt * wmax > 0.05:
        raise ParameterError(
            f"unitary_stepper: dt*max(omega) = {dt * wmax:.3f} exceeds 0.05; reduce dt"
        )
    psi0.require_boundary_decay()

    x = psi0.x
    dx = psi0.dx
    n_steps = int(round((t_final - t0) / dt))
    if abs(t0 + n_steps * dt - t_final) > 1e-9 * max(1.0, abs(t_final)):
        raise ParameterError("unitary_stepper: (t_final - t0) must be a multiple of dt")

    v = psi0.values.copy()
    scale0 = float(np.max(np.abs(v)))
    half = 0.5j * dt / hbar
    for k in range(n_steps):
        t_mid = t0 + (k + 0.5) * dt
        bands, u = _hamiltonian_bands(x, dx, m, hbar, profile.omega_sq(t_mid), spatial_order)
        rhs = v - half * _banded_matvec(bands, u, v)
        ab = (half * bands).astype(complex)
        ab[u] += 1.0
        v = _linalg.solve_banded((u, u), ab, rhs)
        if (k + 1) % check_every == 0 or k + 1 == n_steps:
            edge = max(abs(v[0]), abs(v[-1]))
            if edge > 1e-8 * max(scale0, 1e-300):
                raise TruncationDomainError(
                    f"unitary_stepper: boundary amplitude {edge:.2e} at t={t0 + (k + 1) * dt:.6f}"
                )
    return psi0.with_values(v, t=t_final)


# ---------------------------------------------------------------------------
# quadrature utilities


def overlap(bra: GridWaveFunction, ket: GridWaveFunction) -> complex:
    """<bra|ket> = integral conj(bra) ket dx by end-corrected panel quadrature."""
    match_grids(bra, ket)
    return complex(np.sum(bra.weights * np.conj(bra.values) * ket.values))


def fresnel_quadrature(
    f,
    quad_rate: float,
    linear_rate: float = 0.0,
    eps_seq=(0.02, 0.01, 0.005, 0.0025, 0.00125),
    points_per_cycle: int = 16,
) -> complex:
    """integral f(z) dz over the real line for non-decaying oscillatory f.

    Regularizes with exp(-eps z^2), integrates each damped integral by a fine
    trapezoid sum, and extrapolates eps -> 0 through the interpolating
    polynomial in eps.  `quad_rate` and `linear_rate` bound the quadratic and
    linear phase-rate coefficients of f (|d arg f / dz| <= 2*quad_rate*|z| +
    linear_rate), fixing the sampling density; f must be numpy-vectorized.
    """
    vals = []
    for eps in eps_seq:
        z_max = math.sqrt(40.0 / eps)
        cycles = (abs(quad_rate) * z_max**2 + abs(linear_rate) * z_max) / (2 * math.pi)
        n = int(points_per_cycle * cycles) + 4097
        z = np.linspace(-z_max, z_max, n)
        w = np.exp(-eps * z * z)
        y = w * f(z)
        vals.append(complex(np.trapezoid(y, z)))
    e = np.asarray(eps_seq)
    cr = np.polyfit(e, [v.real for v in vals], len(e) - 1)
    ci = np.polyfit(e, [v.imag for v in vals], len(e) - 1)
    return complex(np.polyval(cr, 0.0), np.polyval(ci, 0.0))
