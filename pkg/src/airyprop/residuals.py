"""Fourth-order finite-difference residuals of the governing equations.

Used to certify that each kernel actually solves its PDE, which in
particular pins down sign and coefficient conventions that printed formulas
can leave ambiguous.
"""

from __future__ import annotations

from .errors import ParameterError
from .kernelcoeffs import EquationVariant


def _d1(f, h):
    """f is the 5-point stencil [f(-2h), f(-h), f(0), f(h), f(2h)]."""
    return (8.0 * (f[3] - f[1]) - (f[4] - f[0])) / (12.0 * h)


def _d2(f, h):
    return (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12.0 * h * h)


def _stencils(kernel, x, y, t, hx, ht):
    fx = [kernel(x + k * hx, y, t) for k in (-2, -1, 0, 1, 2)]
    ft = [kernel(x, y, t + k * ht) for k in (-2, -1, 0, 1, 2)]
    return fx, ft


def pde_residual(
    variant: EquationVariant,
    kernel,
    x: float,
    y: float,
    t: float,
    hx: float = 1e-3,
    ht: float = 1e-3,
    omega_sq=None,
    m: float = 1.0,
    hbar: float = 1.0,
) -> complex:
    """Residual of the variant's Schrodinger equation on kernel(x, y, t).

    The dimensionless variants use their i psi_t + ... = 0 forms; the
    oscillator variants use i hbar psi_t + (hbar^2/2m) psi_xx
    - (m/2) omega^2(t) x^2 psi with omega_sq supplied by the caller.
    """
    variant = EquationVariant(variant)
    fx, ft = _stencils(kernel, x, y, t, hx, ht)
    f0 = fx[2]
    df_dt = _d1(ft, ht)
    d2f_dx2 = _d2(fx, hx)

    if variant is EquationVariant.INCREASING:
        return 1j * df_dt + 0.25 * d2f_dx2 + t * x * x * f0
    if variant is EquationVariant.OSCILLATORY:
        return 1j * df_dt + 0.25 * d2f_dx2 - t * x * x * f0
    if variant is EquationVariant.MOMENTUM_INCREASING:
        return 1j * df_dt - t * d2f_dx2 - 0.25 * x * x * f0
    if variant is EquationVariant.MOMENTUM_OSCILLATORY:
        return 1j * df_dt + t * d2f_dx2 - 0.25 * x * x * f0
    if variant is EquationVariant.GAUGE:
        df_dx = _d1(fx, hx)
        return (
            1j * df_dt
            + 0.25 * d2f_dx2
            + t * x * x * f0
            + (1j / (2.0 * t)) * (2.0 * x * df_dx + f0)
        )
    if variant in (EquationVariant.OSCILLATOR_CHIRP, EquationVariant.OSCILLATOR_GENERAL):
        if omega_sq is None:
            raise ParameterError("pde_residual: oscillator variants need omega_sq")
        return (
            1j * hbar * df_dt
            + (hbar * hbar / (2.0 * m)) * d2f_dx2
            - 0.5 * m * omega_sq(t) * x * x * f0
        )
    raise ParameterError(f"no PDE registered for {variant}")
