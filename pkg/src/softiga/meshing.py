"""Symmetric 1D meshes (uniform and center-graded) and Gauss-Legendre rules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .splines import Mesh1D

__all__ = [
    "QuadratureRule",
    "GradedMeshSpec",
    "gauss_rule",
    "uniform_mesh",
    "graded_mesh",
    "map_rule_to_mesh",
]

MAX_GAUSS_ORDER = 30


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on the reference interval [-1, 1]."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


def gauss_rule(q: int) -> QuadratureRule:
    """Gauss-Legendre rule with q points (exact for degree 2q-1)."""
    if not 1 <= q <= MAX_GAUSS_ORDER:
        raise ValueError(f"quadrature order must be in 1..{MAX_GAUSS_ORDER}, got {q}")
    nodes, weights = np.polynomial.legendre.leggauss(q)
    return QuadratureRule(order=q, nodes=nodes, weights=weights)


def uniform_mesh(x_eps: float, n: int) -> Mesh1D:
    """n equal elements on [-x_eps, x_eps], mirrored exactly about 0."""
    if x_eps <= 0:
        raise ValueError(f"half-width must be positive, got {x_eps}")
    if n < 1:
        raise ValueError(f"element count must be >= 1, got {n}")
    # (2i - n)/n is an exactly antisymmetric integer sequence, so the float
    # breakpoints mirror bitwise
    bp = x_eps * (2.0 * np.arange(n + 1) - n) / n
    bp[0] = -x_eps
    bp[-1] = x_eps
    return Mesh1D(bp)


@dataclass(frozen=True)
class GradedMeshSpec:
    """Symmetric center-graded mesh: sizes grow linearly away from 0.

    ``growth`` is the relative size increase per element moving outward;
    0 reproduces the uniform mesh exactly.
    """

    half_width: float
    n: int
    growth: float = 0.0


def graded_mesh(spec: GradedMeshSpec) -> Mesh1D:
    if spec.half_width <= 0:
        raise ValueError(f"half-width must be positive, got {spec.half_width}")
    if spec.n < 2 or spec.n % 2 != 0:
        raise ValueError(f"graded meshes need an even element count >= 2, got {spec.n}")
    if spec.growth < 0:
        raise ValueError(f"growth must be >= 0, got {spec.growth}")
    if spec.growth == 0.0:
        return uniform_mesh(spec.half_width, spec.n)
    m = spec.n // 2
    # arithmetic progression s*(1 + g*k) on each half, scaled to fill it
    sizes = 1.0 + spec.growth * np.arange(m)
    sizes *= spec.half_width / sizes.sum()
    half = np.concatenate([[0.0], np.cumsum(sizes)])
    half[-1] = spec.half_width
    bp = np.concatenate([-half[:0:-1], half])
    return Mesh1D(bp)


def map_rule_to_mesh(mesh: Mesh1D, rule: QuadratureRule) -> tuple[np.ndarray, np.ndarray]:
    """Map the reference rule to every element; returns (points, weights) of
    shape (n_elements, q)."""
    bp = mesh.breakpoints
    mid = 0.5 * (bp[1:] + bp[:-1])
    half = 0.5 * np.diff(bp)
    points = mid[:, None] + half[:, None] * rule.nodes[None, :]
    weights = half[:, None] * rule.weights[None, :]
    return points, weights
