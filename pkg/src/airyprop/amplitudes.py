"""Transition amplitudes between the asymptotic oscillator eigenbases, their
probabilities, the sudden-jump limit, and the hyperbolic-rotation matrix
elements they realize.

The amplitude c_kn (initial state n at frequency omega0, final state k at
omega1 after the transition window) is assembled exactly as the pair of
integrals it is:

  1. the Gauss transform of H_n through the propagator's complex Gaussian,
  2. the bilinear Hermite integral

         integral exp(-L2 x^2) H_k(b x) H_n(q x) dx
             = 2^(k+n) Gamma((k+n+1)/2) / L2^((k+n+1)/2)
               * (b^2-L2)^(k/2) (q^2-L2)^(n/2)
               * 2F1(-k, -n; (1-k-n)/2; (1 - b q / sqrt((b^2-L2)(q^2-L2)))/2)

     for even k+n (zero by parity otherwise).

Both steps keep each square root paired with its reappearance inside a
Hermite argument or the 2F1 argument, making every product invariant under
the branch flips; principal branches therefore give the amplitude that is
continuous in the transition duration, with no phase conventions left open.
All k, n-dependent magnitudes are accumulated in the log domain, so tables
remain finite well beyond k = n = 64.
"""

from __future__ import annotations

import cmath
import json
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParameterError, ParityError
from .kernelcoeffs import QuadraticPhase
from .propagator import OscillatorConfig
from .specfun import clausen_3f2, hermite, parity_split_2f1

#: default table truncation; the column mass beyond k decays geometrically
#: with ratio D-/D+ < 1, so 64 rows leave far less than 1e-10 behind at
#: desk-scale transitions
K_MAX_DEFAULT = 64


def _scaled(phase: QuadraticPhase, chirp_scaling: float):
    if chirp_scaling == 1.0:
        return phase.alpha, phase.beta, phase.gamma
    s = chirp_scaling
    return s * phase.alpha, s * phase.beta, s * phase.gamma


def quadratic_invariants(
    phase: QuadraticPhase, omega0: float, omega1: float, chirp_scaling: float = 1.0
):
    """(D+, D-) with D± = (alpha w0 ± gamma w1)^2 + (w0 w1 ∓ alpha gamma ± beta^2/4)^2.

    D+ - D- = beta^2 w0 w1 identically; D-/D+ is the geometric decay ratio of
    the transition probabilities and tanh^2 of the hyperbolic angle.
    """
    a, b, g = _scaled(phase, chirp_scaling)
    d_plus = (a * omega0 + g * omega1) ** 2 + (omega0 * omega1 - a * g + b * b / 4.0) ** 2
    d_minus = (a * omega0 - g * omega1) ** 2 + (omega0 * omega1 + a * g - b * b / 4.0) ** 2
    return d_plus, d_minus


def zeta(
    phase: QuadraticPhase, omega0: float, omega1: float, chirp_scaling: float = 1.0
) -> float:
    """Real argument carrier of the terminating hypergeometric factor:

        zeta = beta sqrt(w0 w1) / sqrt(D-).

    Negative for the usual beta < 0 branch; diverges at the identity
    transition (D- = 0), which raises a degenerate-parameter error.
    """
    a, b, g = _scaled(phase, chirp_scaling)
    d_plus, d_minus = quadratic_invariants(phase, omega0, omega1, chirp_scaling)
    if d_minus <= 1e-28 * max(1.0, d_plus):
        raise ParameterError(
            "zeta: denominator vanishes (identity transition); amplitudes are "
            "delta_kn there"
        )
    return b * math.sqrt(omega0 * omega1) / math.sqrt(d_minus)


def sudden_zeta(omega0: float, omega1: float) -> float:
    """Instantaneous-jump limit 2 sqrt(w0 w1)/|w0 - w1|."""
    if omega0 <= 0 or omega1 <= 0:
        raise ParameterError("sudden_zeta: frequencies must be positive")
    if omega0 == omega1:
        raise ParameterError("sudden_zeta: equal frequencies (identity jump)")
    return 2.0 * math.sqrt(omega0 * omega1) / abs(omega0 - omega1)


def transition_amplitude(
    k: int, n: int, phase: QuadraticPhase, cfg: OscillatorConfig
) -> complex:
    """c_kn at the end of the transition from the scaled kernel coefficients.

    `phase` carries the m/2hbar-normalized coefficients at t = T (from
    cfg.scaled_phase(T)); exact zero for odd k+n.
    """
    if k < 0 or n < 0:
        raise DomainError("transition_amplitude: k, n must be nonnegative")
    if (k + n) % 2 == 1:
        return 0.0 + 0.0j
    m, hbar, w0, w1 = cfg.m, cfg.hbar, cfg.omega0, cfg.omega1
    mu, alpha, beta, gamma = phase.mu, phase.alpha, phase.beta, phase.gamma

    lam = cmath.sqrt(0.5 * m / hbar * (w0 - 1j * gamma))
    a = math.sqrt(m * w0 / hbar)
    s = cmath.sqrt(lam * lam - a * a)
    q = 1j * m * a * beta / (4.0 * hbar * lam * s)
    big_lambda = m * beta * beta / (8.0 * hbar * (w0 - 1j * gamma)) - 0.5j * m / hbar * alpha
    lambda2 = big_lambda + 0.5 * m * w1 / hbar
    b = math.sqrt(m * w1 / hbar)
    sb = cmath.sqrt(b * b - lambda2)
    sq = cmath.sqrt(q * q - lambda2)
    if abs(sb * sq) <= 1e-14 * max(1.0, abs(lambda2)):
        raise ParameterError("transition_amplitude: degenerate (identity) transition")

    arg = 0.5 * (1.0 - b * q / (sb * sq))
    zeta_eff = -1j * (2.0 * arg - 1.0)
    if abs(zeta_eff.imag) > 1e-8 * (1.0 + abs(zeta_eff)):
        raise ParameterError(
            f"transition_amplitude: hypergeometric argument not on the unitary "
            f"line (zeta = {zeta_eff!r}); coefficients inconsistent"
        )
    f = parity_split_2f1(k, n, zeta_eff.real)

    log_c = (
        0.25 * math.log(m * w0 / (math.pi * hbar))
        + 0.25 * math.log(m * w1 / (math.pi * hbar))
        - 0.5 * ((k + n) * math.log(2.0) + math.lgamma(k + 1) + math.lgamma(n + 1))
        + 0.5 * math.log(math.pi)
        + math.lgamma((k + n + 1) / 2.0)
        + (k + n) * math.log(2.0)
        - 0.5 * cmath.log(2j * math.pi * mu)
        - cmath.log(lam)
        + n * (cmath.log(s) - cmath.log(lam))
        + k * cmath.log(sb)
        + n * cmath.log(sq)
        - (k + n + 1) * cmath.log(lambda2) / 2.0
    )
    return cmath.exp(log_c) * f


def sudden_amplitude(k: int, n: int, omega0: float, omega1: float) -> complex:
    """Amplitude for an instantaneous frequency jump (pure eigenbasis overlap).

        i^n Gamma((k+n+1)/2) (w0 w1/pi^2)^(1/4)
          sqrt(2^(k+n+1)/(k! n! (w0+w1))) ((w1-w0)/(w1+w0))^((k+n)/2)
          2F1(-k, -n; (1-k-n)/2; (1 + i 2 sqrt(w0 w1)/|w0-w1|)/2)

    for even k+n, zero otherwise.
    """
    if k < 0 or n < 0:
        raise DomainError("sudden_amplitude: k, n must be nonnegative")
    if (k + n) % 2 == 1:
        return 0.0 + 0.0j
    zs = sudden_zeta(omega0, omega1)
    f = parity_split_2f1(k, n, zs)
    rho = (omega1 - omega0) / (omega1 + omega0)
    half = (k + n) // 2
    sign = -1.0 if (rho < 0 and half % 2 == 1) else 1.0
    log_mag = (
        math.lgamma((k + n + 1) / 2.0)
        + 0.25 * math.log(omega0 * omega1 / math.pi**2)
        + 0.5 * ((k + n + 1) * math.log(2.0) - math.lgamma(k + 1) - math.lgamma(n + 1))
        - 0.5 * math.log(omega0 + omega1)
        + half * math.log(abs(rho))
    )
    return (1j) ** n * sign * math.exp(log_mag) * f


def transition_probability(
    k: int, n: int, phase: QuadraticPhase, cfg: OscillatorConfig
) -> float:
    """|c_kn|^2 through the positive terminating 3F2 route.

        |beta| sqrt(w0 w1)/sqrt(D+) * 2^(k+n)/(k! n! pi) Gamma((k+n+1)/2)^2
          * (D-/D+)^((k+n)/2) * 3F2(...; D+/D-)

    Must (and does) match |transition_amplitude|^2; zero for odd k+n.
    """
    if (k + n) % 2 == 1:
        return 0.0
    w0, w1 = cfg.omega0, cfg.omega1
    d_plus, d_minus = quadratic_invariants(phase, w0, w1)
    if d_minus <= 1e-28 * max(1.0, d_plus):
        raise ParameterError("transition_probability: degenerate (identity) transition")
    r = d_minus / d_plus
    log_p = (
        math.log(abs(phase.beta) * math.sqrt(w0 * w1)) - 0.5 * math.log(d_plus)
        + (k + n) * math.log(2.0)
        - math.lgamma(k + 1)
        - math.lgamma(n + 1)
        - math.log(math.pi)
        + 2.0 * math.lgamma((k + n + 1) / 2.0)
        + 0.5 * (k + n) * math.log(r)
    )
    return math.exp(log_p) * clausen_3f2(k, n, d_plus / d_minus)


def _negative_binomial_weight(k: int, p: float) -> float:
    """(p)_k / k! in the log domain."""
    return math.exp(math.lgamma(p + k) - math.lgamma(p) - math.lgamma(k + 1))


def ground_state_probability(
    k: int, phase: QuadraticPhase, cfg: OscillatorConfig
) -> float:
    """|c_{2k,0}|^2 closed form: the negative-binomial law with weight (1/2)_k/k!."""
    d_plus, d_minus = quadratic_invariants(phase, cfg.omega0, cfg.omega1)
    pref = abs(phase.beta) * math.sqrt(cfg.omega0 * cfg.omega1) / math.sqrt(d_plus)
    return pref * _negative_binomial_weight(k, 0.5) * (d_minus / d_plus) ** k


def first_excited_probability(
    k: int, phase: QuadraticPhase, cfg: OscillatorConfig
) -> float:
    """|c_{2k+1,1}|^2 closed form: the negative-binomial law with weight (3/2)_k/k!."""
    d_plus, d_minus = quadratic_invariants(phase, cfg.omega0, cfg.omega1)
    base = phase.beta**2 * cfg.omega0 * cfg.omega1 / d_plus
    return base**1.5 * _negative_binomial_weight(k, 1.5) * (d_minus / d_plus) ** k


# ---------------------------------------------------------------------------
# transition tables


@dataclass(frozen=True)
class TransitionTable:
    """Dense c_kn matrix for 0 <= k, n <= k_max with truncation diagnostics."""

    k_max: int
    entries: np.ndarray
    omega0: float
    omega1: float
    duration: float  # 0.0 marks the sudden jump
    m: float = 1.0
    hbar: float = 1.0
    zeta: float = float("nan")

    @property
    def sudden(self) -> bool:
        return self.duration == 0.0

    def column_defects(self, n_max: int | None = None) -> np.ndarray:
        """|sum_k |c_kn|^2 - 1| per column up to n_max."""
        n_max = self.k_max if n_max is None else n_max
        mass = np.sum(np.abs(self.entries[:, : n_max + 1]) ** 2, axis=0)
        return np.abs(mass - 1.0)

    def orthonormality_defect(self, n_max: int = 4) -> float:
        """max |sum_k conj(c_kn) c_kp - delta_np| over n, p <= n_max."""
        block = self.entries[:, : n_max + 1]
        gram = block.conj().T @ block
        return float(np.max(np.abs(gram - np.eye(n_max + 1))))

    def apply(self, c0: np.ndarray) -> np.ndarray:
        return self.entries[:, : len(c0)] @ np.asarray(c0, dtype=complex)

    def to_json(self, path=None):
        payload = {
            "params": {
                "omega0": self.omega0,
                "omega1": self.omega1,
                "duration": self.duration,
                "m": self.m,
                "hbar": self.hbar,
                "sudden": self.sudden,
            },
            "K_max": self.k_max,
            "zeta": self.zeta,
            "entries": [
                [[v.real, v.imag] for v in row] for row in self.entries
            ],
            "unitarity_defect": self.column_defects().tolist(),
        }
        if path is None:
            return payload
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        return payload

    def to_probability_csv(self, path):
        """|c_kn|^2 matrix, one row per k, columns n."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("k," + ",".join(f"n{n}" for n in range(self.k_max + 1)) + "\n")
            for k in range(self.k_max + 1):
                probs = (f"{float(abs(v) ** 2)!r}" for v in self.entries[k])
                fh.write(f"{k}," + ",".join(probs) + "\n")


def transition_table(
    cfg: OscillatorConfig, k_max: int = K_MAX_DEFAULT, mu=None
) -> TransitionTable:
    """Table of c_kn(T) for the transition described by cfg."""
    phase = cfg.scaled_phase(cfg.T, mu=mu)
    entries = np.zeros((k_max + 1, k_max + 1), dtype=complex)
    for k in range(k_max + 1):
        for n in range(k % 2, k_max + 1, 2):
            entries[k, n] = transition_amplitude(k, n, phase, cfg)
    return TransitionTable(
        k_max=k_max,
        entries=entries,
        omega0=cfg.omega0,
        omega1=cfg.omega1,
        duration=cfg.T,
        m=cfg.m,
        hbar=cfg.hbar,
        zeta=zeta(phase, cfg.omega0, cfg.omega1),
    )


def sudden_transition_table(
    omega0: float, omega1: float, k_max: int = K_MAX_DEFAULT
) -> TransitionTable:
    entries = np.zeros((k_max + 1, k_max + 1), dtype=complex)
    for k in range(k_max + 1):
        for n in range(k % 2, k_max + 1, 2):
            entries[k, n] = sudden_amplitude(k, n, omega0, omega1)
    return TransitionTable(
        k_max=k_max,
        entries=entries,
        omega0=omega0,
        omega1=omega1,
        duration=0.0,
        zeta=sudden_zeta(omega0, omega1),
    )


def expand_state(c0, table: TransitionTable) -> np.ndarray:
    """New-basis coefficients c1_k = sum_n c_kn c0_n.

    A non-normalized input is reported as a warning (the defect propagates
    linearly), not an error.
    """
    c0 = np.asarray(c0, dtype=complex)
    if c0.ndim != 1 or len(c0) > table.k_max + 1:
        raise ParameterError("expand_state: coefficient vector longer than the table")
    defect = abs(float(np.sum(np.abs(c0) ** 2)) - 1.0)
    if defect > 1e-8:
        warnings.warn(
            f"expand_state: input norm defect {defect:.2e}", stacklevel=2
        )
    return table.apply(c0)


# ---------------------------------------------------------------------------
# hyperbolic-rotation (SU(1,1) discrete-series) matrix elements


@dataclass(frozen=True)
class BargmannAngles:
    """Euclidean angles theta, phi and hyperbolic angle tau of the evolution.

    tau carries the sign of beta (the branch that fixes 1/sinh(tau/2) =
    beta w0 w1 / sqrt(D-)); |tanh(tau/2)| < 1 always.
    """

    theta: float
    tau: float
    phi: float


@dataclass(frozen=True)
class BargmannIndex:
    """Discrete-series labels: j in {-3/4, -1/4}, weights lam, lam' >= j+1."""

    j: float
    lam: float
    lam_prime: float

    def __post_init__(self):
        if self.j not in (-0.75, -0.25):
            raise ParameterError("BargmannIndex: j must be -3/4 or -1/4")
        for v in (self.lam, self.lam_prime):
            steps = v - (self.j + 1.0)
            if steps < -1e-12 or abs(steps - round(steps)) > 1e-12:
                raise ParameterError(
                    "BargmannIndex: lam - (j+1) must be a nonnegative integer"
                )

    @property
    def row(self) -> int:
        return int(round(self.lam - (self.j + 1.0)))

    @property
    def col(self) -> int:
        return int(round(self.lam_prime - (self.j + 1.0)))


def quantum_numbers(k: int, n: int) -> BargmannIndex:
    """(j, lam, lam') for the amplitude c_kn: (-3/4, r+1/4, s+1/4) at k=2r,
    n=2s and (-1/4, r+3/4, s+3/4) at k=2r+1, n=2s+1."""
    if k < 0 or n < 0:
        raise DomainError("quantum_numbers: k, n must be nonnegative")
    if (k + n) % 2 == 1:
        raise ParityError("quantum_numbers: k+n must be even")
    if k % 2 == 0:
        return BargmannIndex(j=-0.75, lam=k // 2 + 0.25, lam_prime=n // 2 + 0.25)
    return BargmannIndex(j=-0.25, lam=(k - 1) // 2 + 0.75, lam_prime=(n - 1) // 2 + 0.75)


def bargmann_angles(
    phase: QuadraticPhase, omega0: float, omega1: float, chirp_scaling: float = 1.0
) -> BargmannAngles:
    """Angles of the factorized evolution, from the kernel coefficients:

        tan theta = (2 a w0^2 w1 + 2 g w1 (a g - b^2/4)) / (...)
        tan phi   = (-2 g w0 w1^2 - 2 a w0 (a g - b^2/4)) / (...)
        tanh^2(tau/2) = D-/D+,  sign(tau) = sign(beta).

    Exchanging (a <-> g, w0 <-> w1) swaps theta and phi.
    """
    a, b, g = _scaled(phase, chirp_scaling)
    w0, w1 = omega0, omega1
    cross = a * g - b * b / 4.0
    pp = (a * w0 + g * w1) * (a * w0 - g * w1)
    qq = (w0 * w1 + cross) * (w0 * w1 - cross)
    num_theta = 2.0 * a * w0 * w0 * w1 + 2.0 * g * w1 * cross
    den_theta = pp - qq
    num_phi = -2.0 * g * w0 * w1 * w1 - 2.0 * a * w0 * cross
    den_phi = pp + qq
    if (num_theta == 0.0 and den_theta == 0.0) or (num_phi == 0.0 and den_phi == 0.0):
        raise ParameterError("bargmann_angles: angle indeterminate (degenerate input)")
    d_plus, d_minus = quadratic_invariants(phase, w0, w1, chirp_scaling)
    if d_plus <= 0.0:
        raise ParameterError("bargmann_angles: degenerate invariants")
    ratio = math.sqrt(max(d_minus, 0.0) / d_plus)
    tau = 2.0 * math.atanh(ratio) * (1.0 if b >= 0 else -1.0)
    return BargmannAngles(
        theta=math.atan2(num_theta, den_theta),
        tau=tau,
        phi=math.atan2(num_phi, den_phi),
    )


def bargmann_t(idx: BargmannIndex, tau: float) -> float:
    """Hyperbolic matrix element t^j_{lam lam'}(tau) for tau > 0:

        (-1)^(lam-j-1)/Gamma(2j+2)
          sqrt(Gamma(lam+j+1) Gamma(lam'+j+1) / ((lam-j-1)! (lam'-j-1)!))
          sinh(tau/2)^(-2j-2) tanh(tau/2)^(lam+lam')
          2F1(-(lam-j-1), -(lam'-j-1); 2j+2; -1/sinh(tau/2)^2)
    """
    if not tau > 0.0:
        raise DomainError(
            "bargmann_t: tau must be positive (the tau -> 0 limit is the "
            "identity; see bargmann_t_origin)"
        )
    r, s = idx.row, idx.col
    c = 2.0 * idx.j + 2.0
    sh = math.sinh(tau / 2.0)
    th = math.tanh(tau / 2.0)
    from .specfun import HypTermSpec, hyp2f1_term

    f = hyp2f1_term(HypTermSpec(r, s, c, -1.0 / (sh * sh))).real
    log_mag = (
        -math.lgamma(c)
        + 0.5
        * (
            math.lgamma(idx.lam + idx.j + 1.0)
            + math.lgamma(idx.lam_prime + idx.j + 1.0)
            - math.lgamma(r + 1.0)
            - math.lgamma(s + 1.0)
        )
        - c * math.log(sh)
        + (idx.lam + idx.lam_prime) * math.log(th)
    )
    return (-1.0) ** r * math.exp(log_mag) * f


def bargmann_t_origin(idx: BargmannIndex) -> float:
    """tau -> 0+ limit: the identity matrix delta_{lam lam'}."""
    return 1.0 if idx.row == idx.col else 0.0


def bargmann_full(idx: BargmannIndex, angles: BargmannAngles) -> complex:
    """T^j = exp(-i lam theta) t^j_{lam lam'}(|tau|) exp(-i lam' phi).

    The two Euclidean factors are unimodular, so |T^j| = |t^j|.
    """
    t = bargmann_t(idx, abs(angles.tau))
    return cmath.exp(-1j * idx.lam * angles.theta) * t * cmath.exp(
        -1j * idx.lam_prime * angles.phi
    )
