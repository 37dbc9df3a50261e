"""Uniform-grid wave functions and panel quadrature weights."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, GridMismatchError, TruncationDomainError

#: edge amplitude above which a grid is considered too small for its content
BOUNDARY_TOL = 1e-10


def gregory_weights(n: int, dx: float) -> np.ndarray:
    """Composite quadrature weights: trapezoid with 4th-order end corrections.

    For integrands decaying at the boundary the corrections are inert and the
    rule inherits the superalgebraic accuracy of the trapezoid sum.
    """
    if n < 8:
        raise DomainError("gregory_weights: need at least 8 points")
    w = np.ones(n)
    w[[0, -1]] = 3.0 / 8.0
    w[[1, -2]] = 7.0 / 6.0
    w[[2, -3]] = 23.0 / 24.0
    return w * dx


@dataclass(frozen=True)
class GridWaveFunction:
    """Complex samples of psi on a uniform spatial grid at one time."""

    x_min: float
    x_max: float
    n_points: int
    values: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        if self.n_points < 16:
            raise DomainError("GridWaveFunction: need at least 16 points")
        if self.x_max <= self.x_min:
            raise DomainError("GridWaveFunction: empty domain")
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.n_points,):
            raise DomainError(
                f"GridWaveFunction: expected {self.n_points} samples, got shape {v.shape}"
            )
        if not np.all(np.isfinite(v.view(float))):
            raise DomainError("GridWaveFunction: non-finite samples")
        object.__setattr__(self, "values", v)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def weights(self) -> np.ndarray:
        return gregory_weights(self.n_points, self.dx)

    def norm_squared(self) -> float:
        return float(np.real(np.sum(self.weights * np.abs(self.values) ** 2)))

    def norm(self) -> float:
        return self.norm_squared() ** 0.5

    def edge_amplitude(self) -> float:
        return float(max(abs(self.values[0]), abs(self.values[-1])))

    def require_boundary_decay(self, tol: float = BOUNDARY_TOL):
        if self.edge_amplitude() >= tol:
            raise TruncationDomainError(
                f"wave function carries amplitude {self.edge_amplitude():.3e} at the "
                f"grid edge (tolerance {tol:.1e}); enlarge the domain"
            )

    def with_values(self, values: np.ndarray, t: float | None = None) -> "GridWaveFunction":
        return replace(self, values=values, t=self.t if t is None else t)

    @classmethod
    def from_callable(cls, f, x_min: float, x_max: float, n_points: int, t: float = 0.0):
        x = np.linspace(x_min, x_max, n_points)
        return cls(x_min=x_min, x_max=x_max, n_points=n_points, values=f(x) + 0j, t=t)

    def to_csv(self, path):
        """Three columns: x, Re psi, Im psi (shortest round-trip floats)."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("x,re,im\n")
            for x, v in zip(self.x, self.values):
                fh.write(f"{float(x)!r},{float(v.real)!r},{float(v.imag)!r}\n")

    def to_json(self, path=None):
        """Envelope {domain, t, n_points, data}; returns the dict if path is None."""
        payload = {
            "domain": [self.x_min, self.x_max],
            "t": self.t,
            "n_points": self.n_points,
            "data": [[v.real, v.imag] for v in self.values],
        }
        if path is None:
            return payload
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        return payload

    @classmethod
    def from_json(cls, payload) -> "GridWaveFunction":
        data = np.array([complex(re, im) for re, im in payload["data"]])
        return cls(
            x_min=payload["domain"][0],
            x_max=payload["domain"][1],
            n_points=payload["n_points"],
            values=data,
            t=payload["t"],
        )


def match_grids(a: GridWaveFunction, b: GridWaveFunction):
    if (a.x_min, a.x_max, a.n_points) != (b.x_min, b.x_max, b.n_points):
        raise GridMismatchError(
            f"grids differ: ({a.x_min}, {a.x_max}, {a.n_points}) vs "
            f"({b.x_min}, {b.x_max}, {b.n_points})"
        )
