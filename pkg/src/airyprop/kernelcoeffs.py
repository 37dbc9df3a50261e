"""Quadratic-phase coefficients (mu, alpha, beta, gamma) for every equation
variant handled by the package.

Each Schrodinger-type equation here admits Gaussian kernels

    K(x, y, t) = exp(i(alpha(t) x^2 + beta(t) x y + gamma(t) y^2)) / sqrt(2 pi i mu(t)),

where alpha solves a Riccati equation linearized by a second-order classical
equation for mu, and beta, gamma follow by first-order equations.  The
variants and their coefficient systems:

    increasing            alpha' - t + alpha^2 = 0,          mu'' = t mu
    oscillatory           alpha' + t + alpha^2 = 0,          mu'' = -t mu
    momentum_increasing   alpha' + 1/4 - 4 t alpha^2 = 0,    mu'' - mu'/t - t mu = 0
    momentum_oscillatory  alpha' + 1/4 + 4 t alpha^2 = 0,    mu'' - mu'/t + t mu = 0
    gauge                 alpha' - t + (2/t) alpha + alpha^2 = 0  (singular at t=0)
    oscillator_chirp      alpha' + tau + alpha^2 = 0 in tau = omega t + delta
    oscillator_general    alpha' + w2(t) + alpha^2 = 0 for a frequency profile w2

The Green-function branch of each system has mu -> 0 as its time argument
approaches the initial instant; zeros of mu elsewhere are caustics, where the
kernel is singular.  All constructors fail loudly at caustics with a
bracketing interval rather than returning infinities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import CausticError, DomainError, ParameterError, SingularOriginError
from .specfun import airy_pair

#: scale-aware zero threshold for mu
ZERO_TOL = 1e-12


class EquationVariant(str, Enum):
    INCREASING = "increasing"
    OSCILLATORY = "oscillatory"
    MOMENTUM_INCREASING = "momentum_increasing"
    MOMENTUM_OSCILLATORY = "momentum_oscillatory"
    GAUGE = "gauge"
    OSCILLATOR_CHIRP = "oscillator_chirp"
    OSCILLATOR_GENERAL = "oscillator_general"


#: variants whose kernels are built directly from the Airy pair at +/-t
AIRY_VARIANTS = (
    EquationVariant.INCREASING,
    EquationVariant.OSCILLATORY,
    EquationVariant.MOMENTUM_INCREASING,
    EquationVariant.MOMENTUM_OSCILLATORY,
    EquationVariant.GAUGE,
)


@dataclass(frozen=True)
class QuadraticPhase:
    """Kernel coefficients at one time; `t` is the variant's time argument."""

    t: float
    mu: float
    alpha: float
    beta: float
    gamma: float


def bracket_mu_zero(mu_fn, t_lo: float, t_hi: float, n: int = 512):
    """Locate the first sign change of mu_fn on (t_lo, t_hi]; None if there is none.

    Returns a (lo, hi) bisection bracket of width ~1e-13 * span.
    """
    span = t_hi - t_lo
    ts = [t_lo + span * (i + 1) / n for i in range(n)]
    prev_t, prev_v = ts[0], mu_fn(ts[0])
    for t in ts[1:]:
        v = mu_fn(t)
        if prev_v == 0.0:
            return (prev_t, prev_t)
        if prev_v * v < 0.0:
            lo, hi, vlo = prev_t, t, prev_v
            while hi - lo > 1e-13 * max(1.0, span):
                mid = 0.5 * (lo + hi)
                vm = mu_fn(mid)
                if vm == 0.0 or vlo * vm < 0.0:
                    hi = mid
                else:
                    lo, vlo = mid, vm
            return (lo, hi)
        prev_t, prev_v = t, v
    return None


def _caustic_check(mu: float, scale: float, t: float, variant, mu_fn=None, t_lo: float = 0.0):
    if abs(mu) < ZERO_TOL * max(1.0, scale):
        bracket = None
        if mu_fn is not None and t > t_lo:
            bracket = bracket_mu_zero(mu_fn, t_lo, t)
        where = f" (mu zero bracketed in {bracket})" if bracket else ""
        raise CausticError(
            f"{variant}: mu vanishes at t={t!r}{where}; kernel singular",
            t=t,
            bracket=bracket,
        )


def _caustic_with_crossing(mu, anchor, scale, t, variant, mu_fn):
    """Threshold check plus sign-crossing detection against the t=0 value."""
    if mu * anchor < 0.0 and t > 0.0:
        bracket = bracket_mu_zero(mu_fn, 0.0, t)
        raise CausticError(
            f"{variant}: mu changed sign on (0, {t!r}] "
            f"(zero bracketed in {bracket}); kernel singular beyond the caustic",
            t=t,
            bracket=bracket,
        )
    _caustic_check(mu, scale, t, variant, mu_fn=mu_fn)


@lru_cache(maxsize=8)
def _green_caustic_bracket(variant: EquationVariant):
    """Bracket of the first positive zero of the Green branch's mu (cached)."""
    if variant is EquationVariant.OSCILLATORY:
        fn = lambda u: airy_pair(-u).a
    else:  # momentum_oscillatory
        fn = lambda u: airy_pair(-u).db
    return bracket_mu_zero(fn, 1e-3, 29.0, n=8192)


def _require_before_first_green_caustic(variant: EquationVariant, t: float):
    bracket = _green_caustic_bracket(variant)
    if bracket is not None and t >= bracket[0]:
        raise CausticError(
            f"{variant.value}: t={t!r} is at or beyond the first caustic "
            f"(mu zero bracketed in {bracket})",
            t=t,
            bracket=bracket,
        )


@lru_cache(maxsize=128)
def first_oscillator_caustic(delta: float, forward: bool = True):
    """Bracket of the mu(., delta) zero nearest tau = delta in one direction.

    Excludes the anchor zero at tau = delta itself.  Returns None when no
    zero exists within the Airy evaluation range in that direction.
    """
    off = 1e-6 * max(1.0, abs(delta))
    if forward:
        hi = min(delta + 8.0, 29.5)
        return bracket_mu_zero(lambda u: oscillator_mu(u, delta), delta + off, hi, n=4096)
    lo = max(delta - 8.0, -29.5)
    if lo >= delta - off:
        return None
    br = bracket_mu_zero(
        lambda v: oscillator_mu(delta - v, delta), off, delta - lo, n=4096
    )
    if br is None:
        return None
    return (delta - br[1], delta - br[0])


def _require_before_oscillator_caustic(tau: float, delta: float):
    if abs(tau - delta) < ZERO_TOL * max(1.0, abs(delta)):
        raise CausticError(
            "oscillator_chirp: tau = delta is the kernel's initial singular point "
            "(mu(delta) = 0)",
            t=tau,
            bracket=(delta, delta),
        )
    forward = tau > delta
    bracket = first_oscillator_caustic(delta, forward)
    if bracket is None:
        return
    lo, hi = bracket
    past = tau >= lo if forward else tau <= hi
    if past:
        raise CausticError(
            f"oscillator_chirp: tau={tau!r} is at or beyond the first caustic "
            f"(mu zero bracketed in {bracket})",
            t=tau,
            bracket=bracket,
        )


def green_coeffs(variant: EquationVariant, t: float) -> QuadraticPhase:
    """Green-function branch coefficients of an Airy-pair variant at t > 0.

    increasing:           mu = a(t)/2,    alpha = a'/a,       beta = -2/a,    gamma = b/a
    oscillatory:          mu = -a(-t)/2,  alpha = -a'(-t)/a(-t), beta = 2/a(-t), gamma = -b(-t)/a(-t)
    momentum_increasing:  mu = -2 b'(t),  alpha = -b/(4b'),   beta = 1/(2b'), gamma = -a'/(4b')
    momentum_oscillatory: mu = 2 b'(-t),  alpha = b(-t)/(4b'(-t)), beta = -1/(2b'(-t)), gamma = a'(-t)/(4b'(-t))
    gauge:                increasing values with alpha shifted by -1/t
    """
    variant = EquationVariant(variant)
    if variant not in AIRY_VARIANTS:
        raise ParameterError(
            f"green_coeffs: use oscillator_coeffs / general_oscillator_coeffs for {variant.value}"
        )
    if not t > 0.0:
        if variant is EquationVariant.GAUGE:
            raise SingularOriginError("gauge variant is defined for t > 0 only")
        raise DomainError(f"green_coeffs: t must be positive, got {t!r}")

    if variant in (EquationVariant.INCREASING, EquationVariant.GAUGE):
        s = airy_pair(t)
        _caustic_check(s.a, abs(s.b), t, variant.value)
        alpha = s.da / s.a
        if variant is EquationVariant.GAUGE:
            alpha -= 1.0 / t
        return QuadraticPhase(t=t, mu=0.5 * s.a, alpha=alpha, beta=-2.0 / s.a, gamma=s.b / s.a)

    if variant is EquationVariant.OSCILLATORY:
        _require_before_first_green_caustic(variant, t)
        s = airy_pair(-t)
        _caustic_check(s.a, abs(s.b), t, variant.value, mu_fn=lambda u: airy_pair(-u).a)
        return QuadraticPhase(
            t=t, mu=-0.5 * s.a, alpha=-s.da / s.a, beta=2.0 / s.a, gamma=-s.b / s.a
        )

    if variant is EquationVariant.MOMENTUM_INCREASING:
        s = airy_pair(t)
        _caustic_check(s.db, abs(s.da), t, variant.value)
        return QuadraticPhase(
            t=t,
            mu=-2.0 * s.db,
            alpha=-s.b / (4.0 * s.db),
            beta=1.0 / (2.0 * s.db),
            gamma=-s.da / (4.0 * s.db),
        )

    # momentum_oscillatory
    _require_before_first_green_caustic(variant, t)
    s = airy_pair(-t)
    _caustic_check(s.db, abs(s.da), t, variant.value, mu_fn=lambda u: airy_pair(-u).db)
    return QuadraticPhase(
        t=t,
        mu=2.0 * s.db,
        alpha=s.b / (4.0 * s.db),
        beta=-1.0 / (2.0 * s.db),
        gamma=s.da / (4.0 * s.db),
    )


def general_coeffs(
    variant: EquationVariant,
    c1: float,
    c2: float,
    beta0: float,
    gamma0: float,
    t: float,
) -> QuadraticPhase:
    """General regular solution of an Airy-pair variant's coefficient system.

    The classical solution is mu = c1*a(+-t) + c2*b(+-t) for the coordinate
    variants and mu = c1*a'(+-t) + c2*b'(+-t) in the momentum representation;
    (beta0, gamma0) are the values of beta, gamma at t = 0.  Regularity at the
    initial instant requires mu(0) != 0: c2 != 0 for coordinate variants,
    c1 != 0 for momentum variants.
    """
    variant = EquationVariant(variant)
    if variant not in AIRY_VARIANTS:
        raise ParameterError(
            f"general_coeffs: use chirp_general_coeffs for {variant.value}"
        )
    if c1 == 0.0 and c2 == 0.0:
        raise ParameterError("general_coeffs: (c1, c2) = (0, 0) is degenerate")

    momentum = variant in (
        EquationVariant.MOMENTUM_INCREASING,
        EquationVariant.MOMENTUM_OSCILLATORY,
    )
    if momentum and c1 == 0.0:
        raise ParameterError(f"{variant.value}: mu(0) = c1 must be nonzero")
    if not momentum and c2 == 0.0:
        raise ParameterError(f"{variant.value}: mu(0) = c2 must be nonzero")

    flipped = variant in (
        EquationVariant.OSCILLATORY,
        EquationVariant.MOMENTUM_OSCILLATORY,
    )
    if variant is EquationVariant.GAUGE and not t > 0.0:
        raise SingularOriginError("gauge variant is defined for t > 0 only")
    s = airy_pair(-t if flipped else t)

    def pair(u):
        return airy_pair(-u if flipped else u)

    if momentum:
        mu_fn = lambda u: c1 * pair(u).da + c2 * pair(u).db
        mu = c1 * s.da + c2 * s.db
        scale = max(abs(c1 * s.da), abs(c2 * s.db))
        _caustic_with_crossing(mu, c1, scale, t, variant.value, mu_fn)
        sign = -1.0 if variant is EquationVariant.MOMENTUM_INCREASING else 1.0
        return QuadraticPhase(
            t=t,
            mu=mu,
            alpha=sign * (c1 * s.a + c2 * s.b) / (4.0 * mu),
            beta=c1 * beta0 / mu,
            gamma=gamma0 - sign * c1 * beta0**2 * s.db / mu,
        )

    mu_fn = lambda u: c1 * pair(u).a + c2 * pair(u).b
    mu = c1 * s.a + c2 * s.b
    scale = max(abs(c1 * s.a), abs(c2 * s.b))
    _caustic_with_crossing(mu, c2, scale, t, variant.value, mu_fn)
    dmu_signed = c1 * s.da + c2 * s.db  # derivative w.r.t. the Airy argument
    alpha = (-dmu_signed if flipped else dmu_signed) / mu
    if variant is EquationVariant.GAUGE:
        alpha -= 1.0 / t
    # gamma' = -beta^2/4 forces opposite signs of the a/mu term for the two
    # time orientations: d/dt[a(-t)/mu] = -c2 W(a,b)/mu^2 while
    # d/dt[a(t)/mu] = +c2 W(a,b)/mu^2, with W = -1.
    gsign = 1.0 if flipped else -1.0
    return QuadraticPhase(
        t=t,
        mu=mu,
        alpha=alpha,
        beta=c2 * beta0 / mu,
        gamma=gamma0 + gsign * c2 * beta0**2 * s.a / (4.0 * mu),
    )


def compose_forward(init: QuadraticPhase, green: QuadraticPhase) -> QuadraticPhase:
    """Map initial data (at t=0) through the Green branch to the general solution.

        mu(t)    = 2 mu(0) mu0(t) (alpha(0) + gamma0(t))
        alpha(t) = alpha0(t) - beta0(t)^2 / (4 (alpha(0) + gamma0(t)))
        beta(t)  = -beta(0) beta0(t) / (2 (alpha(0) + gamma0(t)))
        gamma(t) = gamma(0) - beta(0)^2 / (4 (alpha(0) + gamma0(t)))
    """
    denom = init.alpha + green.gamma
    if abs(denom) < 1e-12 * max(1.0, abs(init.alpha), abs(green.gamma)):
        raise ParameterError("compose_forward: alpha(0) + gamma0(t) vanishes")
    return QuadraticPhase(
        t=green.t,
        mu=2.0 * init.mu * green.mu * denom,
        alpha=green.alpha - green.beta**2 / (4.0 * denom),
        beta=-init.beta * green.beta / (2.0 * denom),
        gamma=init.gamma - init.beta**2 / (4.0 * denom),
    )


def compose_inverse(general_t: QuadraticPhase, general_0: QuadraticPhase) -> QuadraticPhase:
    """Recover the Green branch from a regular solution at times t and 0.

        mu0(t)    = 2 mu(t) (gamma(0) - gamma(t)) / (mu(0) beta(0)^2)
        alpha0(t) = alpha(t) + beta(t)^2 / (4 (gamma(0) - gamma(t)))
        beta0(t)  = -beta(0) beta(t) / (2 (gamma(0) - gamma(t)))
        gamma0(t) = -alpha(0) + beta(0)^2 / (4 (gamma(0) - gamma(t)))
    """
    dg = general_0.gamma - general_t.gamma
    if abs(dg) < 1e-12 * max(1.0, abs(general_0.gamma), abs(general_t.gamma)):
        raise ParameterError("compose_inverse: gamma(0) = gamma(t), inversion degenerate")
    return QuadraticPhase(
        t=general_t.t,
        mu=2.0 * general_t.mu * dg / (general_0.mu * general_0.beta**2),
        alpha=general_t.alpha + general_t.beta**2 / (4.0 * dg),
        beta=-general_0.beta * general_t.beta / (2.0 * dg),
        gamma=-general_0.alpha + general_0.beta**2 / (4.0 * dg),
    )


def oscillator_mu(tau: float, delta: float) -> float:
    """mu(tau) = (ai(-delta) bi(-tau) - bi(-delta) ai(-tau)) / 2.

    Antisymmetric in (tau, delta); vanishes at tau = delta with
    d mu / d tau = 1/2 there.
    """
    sd = airy_pair(-delta)
    st = airy_pair(-tau)
    return 0.5 * (sd.a * st.b - sd.b * st.a)


def oscillator_coeffs(tau: float, delta: float) -> QuadraticPhase:
    """Green branch of the chirped-oscillator system in tau, anchored at tau = delta.

    The returned `t` field holds tau.  Raises CausticError where mu(tau)
    vanishes, including the anchor tau = delta itself (the kernel's initial
    singular point).
    """
    _require_before_oscillator_caustic(tau, delta)
    sd = airy_pair(-delta)
    st = airy_pair(-tau)
    mu = 0.5 * (sd.a * st.b - sd.b * st.a)
    scale = max(abs(sd.a * st.b), abs(sd.b * st.a))
    _caustic_check(mu, scale, tau, "oscillator_chirp")
    d = -2.0 * mu  # ai(-tau) bi(-delta) - ai(-delta) bi(-tau)
    return QuadraticPhase(
        t=tau,
        mu=mu,
        alpha=-(st.da * sd.b - sd.a * st.db) / d,
        beta=2.0 / d,
        gamma=-(sd.da * st.b - st.a * sd.db) / d,
    )


def chirp_general_coeffs(
    tau: float, delta: float, c1: float, c2: float, beta0: float, gamma0: float
) -> QuadraticPhase:
    """General regular solution of the chirped-oscillator system, anchored at tau = delta.

    mu = c1 ai(-tau) + c2 bi(-tau); (beta0, gamma0) are the values at tau = delta.
    gamma integrates beta^2/4 in closed form through the independent solution
    nu = -c2 ai(-tau) + c1 bi(-tau), using d(nu/mu)/dtau = W/mu^2 with the
    constant W = c1^2 + c2^2.
    """
    if c1 == 0.0 and c2 == 0.0:
        raise ParameterError("chirp_general_coeffs: (c1, c2) = (0, 0) is degenerate")

    def vals(u):
        s = airy_pair(-u)
        mu = c1 * s.a + c2 * s.b
        dmu = -(c1 * s.da + c2 * s.db)
        nu = -c2 * s.a + c1 * s.b
        return mu, dmu, nu

    mu_d, _, nu_d = vals(delta)
    if abs(mu_d) < ZERO_TOL * max(1.0, abs(c1) + abs(c2)):
        raise ParameterError("chirp_general_coeffs: mu(delta) = 0, anchor degenerate")
    mu, dmu, nu = vals(tau)
    if mu * mu_d < 0.0:
        lo, hi = (delta, tau) if tau > delta else (tau, delta)
        bracket = bracket_mu_zero(lambda u: vals(u)[0], lo, hi)
        raise CausticError(
            f"oscillator_chirp: mu changed sign between the anchor and tau={tau!r} "
            f"(zero bracketed in {bracket})",
            t=tau,
            bracket=bracket,
        )
    _caustic_check(mu, abs(c1) + abs(c2), tau, "oscillator_chirp")
    w = c1 * c1 + c2 * c2
    integral = (nu / mu - nu_d / mu_d) / w  # int_delta^tau ds / mu(s)^2
    return QuadraticPhase(
        t=tau,
        mu=mu,
        alpha=dmu / mu,
        beta=beta0 * mu_d / mu,
        gamma=gamma0 - 0.25 * beta0**2 * mu_d**2 * integral,
    )


def chirp_scaled_coeffs(t: float, m: float, hbar: float, omega: float, delta: float) -> QuadraticPhase:
    """Chirp Green coefficients rescaled to the general-oscillator normalization.

    With tau = omega t + delta and (mu, alpha, beta, gamma) the dimensionless
    chirp branch, the rescaled tuple

        mu_g = (2 hbar / (m omega)) mu,   (alpha_g, beta_g, gamma_g) = omega (alpha, beta, gamma)

    satisfies the oscillator_general system for w2(t) = omega^2 (omega t + delta),
    with mu_g(0) = 0 and mu_g'(0) = hbar/m; the kernel is
    exp(i (m/2hbar)(alpha_g x^2 + ...)) / sqrt(2 pi i mu_g).
    """
    tau = omega * t + delta
    c = oscillator_coeffs(tau, delta)
    return QuadraticPhase(
        t=t,
        mu=2.0 * hbar / (m * omega) * c.mu,
        alpha=omega * c.alpha,
        beta=omega * c.beta,
        gamma=omega * c.gamma,
    )


def general_oscillator_coeffs(mu, t: float, m: float = 1.0, hbar: float = 1.0) -> QuadraticPhase:
    """Coefficients for a frequency profile from a sampled classical solution.

    `mu` is an oracle.ClassicalSolution integrated with mu(0) = 0,
    mu'(0) = hbar/m.  alpha = mu'/mu, beta = -2 hbar/(m mu), and gamma
    combines the endpoint term 1/(mu mu') with the quadrature of
    w2(s)/mu'(s)^2 over (0, t]; mu' must not vanish there.
    """
    from .oracle import gamma_quadrature  # deferred: oracle depends on grids only

    muv = mu.mu(t)
    scale = mu.amplitude()
    _caustic_check(muv, scale, t, "oscillator_general", mu_fn=mu.mu, t_lo=mu.t0)
    return QuadraticPhase(
        t=t,
        mu=muv,
        alpha=mu.dmu(t) / muv,
        beta=-2.0 * hbar / (m * muv),
        gamma=gamma_quadrature(mu, t, m=m, hbar=hbar),
    )


def gauge_alpha(t: float, c1: float, c2: float) -> float:
    """alpha = mu'/mu - 1/t for the gauge-transformed system, mu = c1 a + c2 b."""
    if not t > 0.0:
        raise SingularOriginError("gauge_alpha: the equation is singular at t = 0")
    s = airy_pair(t)
    mu = c1 * s.a + c2 * s.b
    _caustic_check(mu, max(abs(c1 * s.a), abs(c2 * s.b)), t, "gauge")
    return (c1 * s.da + c2 * s.db) / mu - 1.0 / t


def riccati_residuals(variant: EquationVariant, phase_fn, t: float, h: float = 1e-5, omega_sq=None):
    """Central-difference residuals of the variant's three coefficient ODEs.

    phase_fn maps a time to a QuadraticPhase; omega_sq(t) is required for
    oscillator_general.  Returns (r_alpha, r_beta, r_gamma).
    """
    variant = EquationVariant(variant)
    lo, hi, mid = phase_fn(t - h), phase_fn(t + h), phase_fn(t)
    da = (hi.alpha - lo.alpha) / (2 * h)
    db = (hi.beta - lo.beta) / (2 * h)
    dg = (hi.gamma - lo.gamma) / (2 * h)
    a, b, g = mid.alpha, mid.beta, mid.gamma

    if variant is EquationVariant.INCREASING:
        return da - t + a * a, db + a * b, dg + 0.25 * b * b
    if variant in (EquationVariant.OSCILLATORY, EquationVariant.OSCILLATOR_CHIRP):
        return da + t + a * a, db + a * b, dg + 0.25 * b * b
    if variant is EquationVariant.MOMENTUM_INCREASING:
        return da + 0.25 - 4 * t * a * a, db - 4 * t * a * b, dg - t * b * b
    if variant is EquationVariant.MOMENTUM_OSCILLATORY:
        return da + 0.25 + 4 * t * a * a, db + 4 * t * a * b, dg + t * b * b
    if variant is EquationVariant.GAUGE:
        return da - t + 2 * a / t + a * a, db + (a + 1.0 / t) * b, dg + 0.25 * b * b
    if variant is EquationVariant.OSCILLATOR_GENERAL:
        if omega_sq is None:
            raise ParameterError("riccati_residuals: oscillator_general needs omega_sq")
        return da + omega_sq(t) + a * a, db + a * b, dg + 0.25 * b * b
    raise ParameterError(f"no residual system for {variant}")
