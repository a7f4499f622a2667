"""Unified two-/three-body eigenproblem data: potentials, diffusion
coefficients from the mass ratio, and the coercivity shift.

The continuous problem is -div(kappa grad u) - gamma u = lambda u on the
truncated box [-x_eps, x_eps]^d with u = 0 on the boundary.  Adding a
constant shift gamma0 > sup gamma turns the operator positive definite:
-div(kappa grad u) + gamma_hat u = (lambda + gamma0) u with
gamma_hat = gamma0 - gamma.  Physical eigenvalues are recovered by
subtracting gamma0 from the discrete ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PotentialShape",
    "DiffusionCoeffs",
    "ProblemSpec",
    "potential_value",
    "gamma_field",
    "gamma_hat_field",
    "kappa_from_mass_ratio",
    "default_shift",
]


class PotentialShape(enum.Enum):
    """Interaction potential shapes f with max f = 1 and short range
    (xi^2 f(|xi|) -> 0 as |xi| -> infinity)."""

    LORENTZIAN_CUBE = "lorentzian_cube"  # f(xi) = 1/(1+xi^2)^3
    GAUSSIAN = "gaussian"                # f(xi) = exp(-xi^2)


def _shape_value(shape: PotentialShape, xi):
    xi = np.asarray(xi, dtype=float)
    if shape is PotentialShape.LORENTZIAN_CUBE:
        return 1.0 / (1.0 + xi * xi) ** 3
    if shape is PotentialShape.GAUSSIAN:
        return np.exp(-xi * xi)
    raise ValueError(f"unknown potential shape {shape!r}")


def potential_value(shape: PotentialShape, beta: float, xi):
    """Pair interaction v(xi) = beta * f(xi); even and strictly positive."""
    return beta * _shape_value(shape, xi)


@dataclass(frozen=True)
class DiffusionCoeffs:
    """Diagonal diffusion tensor entries (kx, ky); ky is ignored in 1D."""

    kx: float
    ky: float

    def __post_init__(self):
        if self.kx <= 0 or self.ky <= 0:
            raise ValueError("diffusion coefficients must be strictly positive")


def kappa_from_mass_ratio(mass_ratio: float) -> DiffusionCoeffs:
    """Diagonal diffusion coefficients of the reduced three-body problem.

    For R = m_h/m_l: kx = (1/2 + R) / (2 (1 + R)), ky = 1 / (1 + R).
    """
    if mass_ratio <= 0:
        raise ValueError(f"mass ratio must be positive, got {mass_ratio}")
    r = float(mass_ratio)
    kx = (0.5 + r) / (2.0 * (1.0 + r))
    ky = 1.0 / (1.0 + r)
    return DiffusionCoeffs(kx=kx, ky=ky)


@dataclass(frozen=True)
class ProblemSpec:
    """Parameters of the truncated eigenproblem.

    ``gamma0=None`` selects the safe default shift d*beta + 1 (strictly above
    the supremum of gamma).  An explicit gamma0 must satisfy
    gamma0 >= d*beta so that gamma_hat = gamma0 - gamma stays nonnegative.
    """

    dimension: int
    x_eps: float
    shape: PotentialShape
    beta: float
    mass_ratio: float = 1.0
    gamma0: float | None = None

    def __post_init__(self):
        if self.dimension not in (1, 2):
            raise ValueError(f"dimension must be 1 or 2, got {self.dimension}")
        if self.x_eps <= 0:
            raise ValueError(f"domain half-width must be positive, got {self.x_eps}")
        if self.beta <= 0:
            raise ValueError(f"potential magnitude must be positive, got {self.beta}")
        if self.mass_ratio <= 0:
            raise ValueError(f"mass ratio must be positive, got {self.mass_ratio}")
        if self.gamma0 is not None and self.gamma0 < self.dimension * self.beta:
            raise ValueError(
                f"shift {self.gamma0} is below sup(gamma) = {self.dimension * self.beta}; "
                "gamma_hat would change sign")

    @property
    def shift(self) -> float:
        """Resolved shift: explicit gamma0 or the safe default."""
        return default_shift(self) if self.gamma0 is None else float(self.gamma0)

    def kappa(self) -> DiffusionCoeffs:
        if self.dimension == 1:
            return DiffusionCoeffs(kx=0.5, ky=0.5)
        return kappa_from_mass_ratio(self.mass_ratio)


def default_shift(spec: ProblemSpec) -> float:
    """gamma0 = d*beta*max(f) + 1; keeps gamma_hat >= 1 everywhere."""
    return spec.dimension * spec.beta + 1.0


def gamma_field(spec: ProblemSpec, x, y=None):
    """Attractive potential gamma: v(x) in 1D, v(x+y/2) + v(x-y/2) in 2D."""
    if spec.dimension == 1:
        if y is not None:
            raise ValueError("1D problem takes a single coordinate")
        return potential_value(spec.shape, spec.beta, x)
    if y is None:
        raise ValueError("2D problem needs both coordinates")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (potential_value(spec.shape, spec.beta, x + 0.5 * y)
            + potential_value(spec.shape, spec.beta, x - 0.5 * y))


def gamma_hat_field(spec: ProblemSpec, x, y=None):
    """Shifted potential gamma_hat = gamma0 - gamma (nonnegative weight)."""
    return spec.shift - gamma_field(spec, x, y)
