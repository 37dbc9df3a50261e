"""Special functions: a nonstandard Airy pair, Hermite polynomials, terminating
hypergeometric sums, and the classical integral identities built on them.

The Airy pair used throughout the package solves u'' = t*u with

    a(0) = 0,  a'(0) = 1,  b(0) = 1,  b'(0) = 0,

so that W(a, b) = a*b' - a'*b = -1 and W(a', b') = t.  This normalization makes
the pair the natural "sin/cos"-like basis at t = 0, unlike the standard Ai/Bi
pair.  Power series:

    a(t)  = sum_k 3^k (2/3)_k t^(3k+1) / (3k+1)!   = t (1 + t^3/12 + ...)
    b(t)  = sum_k 3^k (1/3)_k t^(3k)   / (3k)!     = 1 + t^3/6 + ...
    a'(t) = sum_k 3^k (2/3)_k t^(3k)   / (3k)!     = 1 + t^3/3 + ...
    b'(t) = sum_k 3^k (4/3)_k t^(3k+2) / (3k+2)!   = t^2/2 + t^5/30 + ...

All four are hypergeometric 0F1 sums; evaluation is by compensated summation of
the exactly-computed term recurrence, with the tail bounded by the first
omitted term.  For |t| above a cutoff the alternating series (t < 0) loses
digits, so the pair is then obtained from standard Ai/Bi through an exact 2x2
change of basis (`_PAIR_FROM_STANDARD` below).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral

from scipy import special as _sps

from .errors import DomainError, ParameterError, ParityError, RangeError

# Change of basis between the (a, b) pair and the standard (Ai, Bi) pair:
# (a, b)^T = _PAIR_FROM_STANDARD @ (Ai, Bi)^T.  The inverse is computed from
# the exact determinant -pi (using Gamma(1/3)Gamma(2/3) = 2*pi/sqrt(3)), which
# gives a 1/(2*pi) prefactor.
_G13 = math.gamma(1.0 / 3.0)
_G23 = math.gamma(2.0 / 3.0)
_PAIR_FROM_STANDARD = (
    (-0.5 * 3 ** (1 / 3) * _G13, 0.5 * 3 ** (-1 / 6) * _G13),
    (0.5 * 3 ** (2 / 3) * _G23, 0.5 * 3 ** (1 / 6) * _G23),
)
_STANDARD_FROM_PAIR = (
    (-(3 ** (1 / 6)) * _G23 / (2 * math.pi), 3 ** (-1 / 6) * _G13 / (2 * math.pi)),
    (3 ** (2 / 3) * _G23 / (2 * math.pi), 3 ** (1 / 3) * _G13 / (2 * math.pi)),
)

#: |t| below which the power series is used directly; above, standard Ai/Bi
#: are converted through the change of basis.  At the cutoff the alternating
#: series still carries ~4e-11 relative accuracy (measured against mpmath).
SERIES_CUTOFF = 8.0

#: Default documented evaluation range of the pair.
T_MAX_DEFAULT = 30.0


@dataclass(frozen=True)
class AirySample:
    """Values (a, b, a', b') of the normalized Airy pair at time t."""

    t: float
    a: float
    b: float
    da: float
    db: float

    def wronskian(self) -> float:
        """a*b' - a'*b; equals -1 for exact values."""
        return self.a * self.db - self.da * self.b

    def wronskian_derivatives(self) -> float:
        """a'*b'' - a''*b' = t*(a'b - ab'); equals t for exact values."""
        return self.t * (self.da * self.b - self.a * self.db)

    def wronskian_defect(self) -> float:
        """|W(a,b) + 1| relative to the size of the products forming W.

        For t > 0 the pair grows like exp((2/3) t^(3/2)); the cancellation in
        a*b' - a'*b is then only meaningful relative to the term magnitudes.
        """
        scale = max(1.0, abs(self.a * self.db), abs(self.da * self.b))
        return abs(self.wronskian() + 1.0) / scale

    def wronskian_derivatives_defect(self) -> float:
        """|W(a',b') - t| relative to the size of the products forming it."""
        scale = max(1.0, abs(self.t * self.da * self.b), abs(self.t * self.a * self.db))
        return abs(self.wronskian_derivatives() - self.t) / scale


def _kahan_add(state, term):
    s, c = state
    y = term - c
    tot = s + y
    return tot, (tot - s) - y


def _hyp0f1(c: float, w: float) -> float:
    """sum_k w^k / (k! (c)_k) by compensated summation of the term recurrence."""
    term = 1.0
    state = (0.0, 0.0)
    peak = 1.0
    k = 0
    while True:
        state = _kahan_add(state, term)
        nxt = term * w / ((k + 1.0) * (c + k))
        peak = max(peak, abs(nxt))
        # past the hump and below round-off of the largest contribution
        if abs(nxt) < 1e-18 * peak and abs(nxt) < abs(term):
            break
        term = nxt
        k += 1
        if k > 800:
            raise RangeError(f"Airy series did not settle for argument w={w!r}")
    return state[0]


def airy_pair_series(t: float) -> AirySample:
    """Evaluate the pair by direct power series (accurate for moderate |t|)."""
    w = t**3 / 9.0
    a = t * _hyp0f1(4.0 / 3.0, w)
    b = _hyp0f1(2.0 / 3.0, w)
    da = _hyp0f1(1.0 / 3.0, w)
    db = 0.5 * t * t * _hyp0f1(5.0 / 3.0, w)
    return AirySample(t=float(t), a=a, b=b, da=da, db=db)


def airy_pair_from_standard(t: float) -> AirySample:
    """Evaluate the pair by converting scipy's standard Ai/Bi values."""
    ai, aip, bi, bip = _sps.airy(t)
    (m00, m01), (m10, m11) = _PAIR_FROM_STANDARD
    return AirySample(
        t=float(t),
        a=m00 * ai + m01 * bi,
        b=m10 * ai + m11 * bi,
        da=m00 * aip + m01 * bip,
        db=m10 * aip + m11 * bip,
    )


def airy_pair(t: float, t_max: float = T_MAX_DEFAULT) -> AirySample:
    """The normalized Airy pair (a, b, a', b') at time t.

    Accuracy: relative error <= 1e-12 for |t| <= 5 and <= 1e-9 for |t| <= 30.
    Raises RangeError outside |t| <= t_max and DomainError on NaN.
    """
    t = float(t)
    if math.isnan(t):
        raise DomainError("airy_pair: t is NaN")
    if abs(t) > t_max:
        raise RangeError(f"airy_pair: |t|={abs(t)} exceeds the evaluation range {t_max}")
    if abs(t) <= SERIES_CUTOFF:
        return airy_pair_series(t)
    return airy_pair_from_standard(t)


def to_standard_airy(s: AirySample) -> tuple[float, float, float, float]:
    """Convert a pair sample to standard (Ai, Bi, Ai', Bi') values at the same t."""
    (m00, m01), (m10, m11) = _STANDARD_FROM_PAIR
    return (
        m00 * s.a + m01 * s.b,
        m10 * s.a + m11 * s.b,
        m00 * s.da + m01 * s.db,
        m10 * s.da + m11 * s.db,
    )


def from_standard_airy(t: float, ai: float, bi: float, dai: float, dbi: float) -> AirySample:
    """Assemble a pair sample from standard Airy values at t."""
    (m00, m01), (m10, m11) = _PAIR_FROM_STANDARD
    return AirySample(
        t=float(t),
        a=m00 * ai + m01 * bi,
        b=m10 * ai + m11 * bi,
        da=m00 * dai + m01 * dbi,
        db=m10 * dai + m11 * dbi,
    )


def airy_ode_residuals_series(t: float) -> tuple[float, float]:
    """(a'' - t*a, b'' - t*b) with a'', b'' summed by exact series differentiation.

    Both vanish identically; the residual measures pure floating-point noise of
    the series evaluation.
    """
    if t == 0.0:
        return 0.0, 0.0
    w = t**3 / 9.0

    def _sum(c, weight):
        term = 1.0
        state = (0.0, 0.0)
        peak = 1.0
        k = 0
        while True:
            state = _kahan_add(state, term * weight(k))
            nxt = term * w / ((k + 1.0) * (c + k))
            peak = max(peak, abs(nxt))
            if abs(nxt) < 1e-18 * peak and abs(nxt) < abs(term):
                break
            term = nxt
            k += 1
            if k > 800:
                raise RangeError("series did not settle")
        return state[0]

    # a = t * sum u_k, u_k carrying t^(3k); term-wise d^2/dt^2 gives the
    # weights (3k+1)(3k)/t^2 relative to t*u_k.
    dda = (1.0 / t) * _sum(4.0 / 3.0, lambda k: (3 * k + 1) * (3 * k))
    ddb = (1.0 / (t * t)) * _sum(2.0 / 3.0, lambda k: (3 * k) * (3 * k - 1))
    s = airy_pair_series(t)
    return dda - t * s.a, ddb - t * s.b


def gamma(x: float) -> float:
    """Gamma function (math.gamma with an explicit pole error)."""
    if x <= 0 and float(x).is_integer():
        raise DomainError(f"gamma pole at {x}")
    return math.gamma(x)


def pochhammer(a, k: int):
    """Rising factorial (a)_k by direct product; exact for exact inputs."""
    if k < 0:
        raise ParameterError("pochhammer: negative order")
    out = a * 0 + 1  # one of the same type as a
    for i in range(k):
        out = out * (a + i)
    return out


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n(x) by the three-term recurrence.

    Accepts real or complex x (scalars or numpy arrays); n <= 200.
    """
    if n < 0:
        raise DomainError("hermite: n must be nonnegative")
    if n > 200:
        raise RangeError(f"hermite: n={n} exceeds the supported maximum 200")
    hkm1 = x * 0 + 1.0
    if n == 0:
        return hkm1
    hk = 2.0 * x
    for k in range(1, n):
        hkm1, hk = hk, 2.0 * x * hk - 2.0 * k * hkm1
    return hk


@dataclass(frozen=True)
class HypTermSpec:
    """Parameters of the terminating 2F1(-k, -n; c; z) sum."""

    k: int
    n: int
    c: object  # real number or Fraction
    z: object  # complex number or Fraction

    def __post_init__(self):
        if self.k < 0 or self.n < 0:
            raise ParameterError("HypTermSpec: k and n must be nonnegative integers")
        jmax = min(self.k, self.n)
        c = self.c
        if _is_exact(c) or float(c) == int(float(c)):
            cv = float(c)
            if cv.is_integer() and 0 >= cv > -jmax:
                raise ParameterError(
                    f"HypTermSpec: c={c} hits a zero Pochhammer denominator within the sum"
                )


def _is_exact(v) -> bool:
    return isinstance(v, (Fraction, Integral)) or (
        isinstance(v, int) and not isinstance(v, bool)
    )


def hyp2f1_term(spec: HypTermSpec):
    """Terminating 2F1(-k, -n; c; z) = sum_j (-k)_j (-n)_j / ((c)_j j!) z^j.

    Exact when c and z are Fractions/integers; a Gaussian-rational z may be
    passed as a (re, im) pair of Fractions, giving an exact (re, im) result.
    Compensated complex summation otherwise.
    """
    k, n, c, z = spec.k, spec.n, spec.c, spec.z
    jmax = min(k, n)
    if _is_exact(c) and isinstance(z, tuple):
        zr, zi = Fraction(z[0]), Fraction(z[1])
        tr, ti = Fraction(1), Fraction(0)
        sr, si = Fraction(0), Fraction(0)
        for j in range(jmax + 1):
            sr += tr
            si += ti
            if j < jmax:
                den = (Fraction(c) + j) * (j + 1)
                if den == 0:
                    raise ParameterError("hyp2f1_term: zero Pochhammer denominator")
                num = (-k + j) * (-n + j)
                tr, ti = (tr * zr - ti * zi) * num / den, (tr * zi + ti * zr) * num / den
        return sr, si
    if _is_exact(c) and _is_exact(z):
        term = Fraction(1)
        total = Fraction(0)
        for j in range(jmax + 1):
            total += term
            if j < jmax:
                den = (Fraction(c) + j) * (j + 1)
                if den == 0:
                    raise ParameterError("hyp2f1_term: zero Pochhammer denominator")
                term = term * ((-k + j) * (-n + j)) * Fraction(z) / den
        return total
    cz = complex(z)
    cc = float(c)
    term = 1.0 + 0.0j
    re = (0.0, 0.0)
    im = (0.0, 0.0)
    for j in range(jmax + 1):
        re = _kahan_add(re, term.real)
        im = _kahan_add(im, term.imag)
        if j < jmax:
            den = (cc + j) * (j + 1.0)
            if den == 0.0:
                raise ParameterError("hyp2f1_term: zero Pochhammer denominator")
            term = term * ((-k + j) * (-n + j)) * cz / den
    return complex(re[0], im[0])


def _parity_split_parts(k: int, n: int, zeta):
    """(even?, real prefactor * 2F1 value) of the parity-reduced form."""
    if (k + n) % 2 != 0:
        raise ParityError("parity split: k+n must be even")
    exact = _is_exact(zeta)
    half = Fraction(1, 2) if exact else 0.5
    zeta = Fraction(zeta) if exact else float(zeta)
    z2 = -(zeta * zeta)
    if k % 2 == 0:
        r, s, c = k // 2, n // 2, half
    else:
        r, s, c = (k - 1) // 2, (n - 1) // 2, 3 * half
    pref = pochhammer(c, r) * pochhammer(c, s) / pochhammer(c, r + s)
    f = hyp2f1_term(HypTermSpec(r, s, c, z2))
    f = f if exact else f.real  # the -zeta^2 argument keeps the sum real
    return k % 2 == 0, pref * f, zeta


def parity_split_2f1(k: int, n: int, zeta: float) -> complex:
    """2F1(-k, -n; (1-k-n)/2; (1+i*zeta)/2) through real-argument parity forms.

    For k = 2r, n = 2s:
        (1/2)_r (1/2)_s / (1/2)_(r+s) * 2F1(-r, -s; 1/2; -zeta^2)
    for k = 2r+1, n = 2s+1:
        -(3/2)_r (3/2)_s / (3/2)_(r+s) * i*zeta * 2F1(-r, -s; 3/2; -zeta^2).

    Raises ParityError for odd k+n, where the amplitude vanishes by symmetry.
    """
    even, val, zeta = _parity_split_parts(k, n, float(zeta))
    if even:
        return complex(val)
    return complex(0.0, -zeta * val)


def parity_split_abs2(k: int, n: int, zeta):
    """|parity_split_2f1(k, n, zeta)|^2; exact Fraction for Fraction/int zeta."""
    even, val, zeta = _parity_split_parts(k, n, zeta)
    if even:
        return val * val
    return zeta * zeta * val * val


def clausen_3f2(k: int, n: int, z):
    """|2F1(-k, -n; (1-k-n)/2; (1+i*zeta)/2)|^2 at z = 1 + zeta^2 as a
    terminating 3F2(-k, -n, -(k+n)/2; (1-k-n)/2, -k-n; z) sum (even k+n).

    For odd k, n the quadratic-transformed 2F1 whose square the 3F2
    represents is purely imaginary, so the raw 3F2 sum equals -|2F1|^2; the
    sign is restored here so the returned value is the nonnegative squared
    modulus in all cases.

    The alternating sum is ill-conditioned in floating point at large k, n,
    so it is always accumulated in exact rational arithmetic (a float z is
    itself an exact rational); the result is exact for exact z and rounded
    once at the end for float z.
    """
    if (k + n) % 2 != 0:
        raise ParityError("clausen_3f2: k+n must be even")
    jmax = min(k, n)
    m = (k + n) // 2
    exact = _is_exact(z)
    term = Fraction(1)
    total = Fraction(0)
    zv = Fraction(z)
    half = Fraction(1, 2)
    for j in range(jmax + 1):
        total += term
        if j < jmax:
            num = (-k + j) * (-n + j) * (-m + j)
            den = ((1 - k - n) * half + j) * (-k - n + j) * (j + 1)
            if den == 0:
                raise ParameterError("clausen_3f2: zero denominator in the sum")
            term = term * num * zv / den
    total = -total if k % 2 else total
    return total if exact else float(total)


def gauss_fresnel(a: complex, b: complex) -> complex:
    """The Gaussian-Fresnel integral over the real line:

        integral exp(i (a z^2 + 2 b z)) dz = sqrt(pi*i/a) exp(-i b^2 / a)

    for Im a >= 0, a != 0, with the principal square root.
    """
    a = complex(a)
    b = complex(b)
    if a == 0:
        raise DomainError("gauss_fresnel: a must be nonzero")
    if a.imag < 0:
        raise DomainError("gauss_fresnel: requires Im a >= 0")
    return cmath.sqrt(1j * math.pi / a) * cmath.exp(-1j * b * b / a)
