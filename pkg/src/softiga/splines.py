"""Open-knot B-spline spaces with maximal smoothness.

Provides construction of degree-p spline spaces on 1D meshes (open knot
vectors, C^{p-1} continuity at simple interior knots), evaluation of basis
functions and derivatives with explicit one-sided limits at knots, and the
interfacial p-th derivative jumps used by the softness penalty.

Homogeneous Dirichlet conditions are imposed by trimming: open-knot B-splines
are interpolatory at the domain endpoints, so dropping the first and last
basis function enforces u = 0 exactly.  Untrimmed basis indices run over
``0 .. n_untrimmed-1``; the trimmed basis keeps ``1 .. n_untrimmed-2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Mesh1D",
    "SplineSpace",
    "open_knot_vector",
    "eval_basis",
    "eval_all_derivatives",
    "collocation_matrix",
    "pth_derivative_jumps",
]


@dataclass(frozen=True)
class Mesh1D:
    """Strictly increasing breakpoints of a 1D mesh with ``n >= 1`` elements."""

    breakpoints: np.ndarray

    def __post_init__(self):
        bp = np.atleast_1d(np.asarray(self.breakpoints, dtype=float))
        if bp.ndim != 1 or bp.size < 2:
            raise ValueError("a mesh needs at least one element (two breakpoints)")
        if not np.all(np.diff(bp) > 0.0):
            raise ValueError("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bp)

    @property
    def n_elements(self) -> int:
        return self.breakpoints.size - 1

    @property
    def element_sizes(self) -> np.ndarray:
        return np.diff(self.breakpoints)

    @property
    def bounds(self) -> tuple[float, float]:
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        bp = self.breakpoints
        scale = max(abs(bp[0]), abs(bp[-1]), 1.0)
        return bool(np.all(np.abs(bp + bp[::-1]) <= tol * scale))


@dataclass(frozen=True)
class SplineSpace:
    """Degree-p B-spline space on an open knot vector.

    ``dimension`` counts the trimmed (boundary-interpolatory functions
    removed) basis: ``N = n_elements + degree - 2``.
    """

    degree: int
    knots: np.ndarray
    mesh: Mesh1D

    @property
    def n_untrimmed(self) -> int:
        return self.mesh.n_elements + self.degree

    @property
    def dimension(self) -> int:
        return self.n_untrimmed - 2


def open_knot_vector(p: int, mesh: Mesh1D) -> SplineSpace:
    """Build the maximal-continuity degree-p space on ``mesh``.

    The first and last breakpoints are repeated p+1 times; interior
    breakpoints appear once, so the basis is C^{p-1} at every interior knot.
    """
    if p < 1:
        raise ValueError(f"spline degree must be >= 1, got {p}")
    bp = mesh.breakpoints
    knots = np.concatenate([np.full(p, bp[0]), bp, np.full(p, bp[-1])])
    return SplineSpace(degree=p, knots=knots, mesh=mesh)


def _element_index(mesh: Mesh1D, x: float, side: str) -> int:
    """Element containing x; at a breakpoint the side picks the neighbour."""
    a, b = mesh.bounds
    if x < a or x > b:
        raise ValueError(f"point {x} outside domain [{a}, {b}]")
    if side == "right":
        e = int(np.searchsorted(mesh.breakpoints, x, side="right")) - 1
    elif side == "left":
        e = int(np.searchsorted(mesh.breakpoints, x, side="left")) - 1
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return min(max(e, 0), mesh.n_elements - 1)


def _ders_on_span(knots: np.ndarray, p: int, x, span: int, nders: int) -> np.ndarray:
    """Values and derivatives of the p+1 basis functions active on a span.

    Classic recursive triangular scheme with the derivative coefficients
    accumulated from inverse knot differences.  ``x`` may be a scalar or an
    array of points inside the span's element; on the element the functions
    are plain polynomials, so evaluation at an element endpoint yields the
    exact one-sided limit.

    Returns ``ders`` of shape ``(nders+1, p+1) + shape(x)`` where
    ``ders[r, j]`` is the r-th derivative of basis function ``span - p + j``.
    """
    x = np.asarray(x, dtype=float)
    left = np.empty((p,) + x.shape)
    right = np.empty((p,) + x.shape)
    vals = np.zeros((p + 1, p + 1) + x.shape)  # upper triangle: basis values per degree
    invd = np.zeros((p + 1, p + 1))  # lower triangle: inverse knot differences
    vals[0, 0] = 1.0
    for j in range(p):
        left[j] = x - knots[span - j]
        right[j] = knots[span + 1 + j] - x
        saved = np.zeros(x.shape)
        for r in range(j + 1):
            invd[j + 1, r] = 1.0 / (knots[span + 1 + r] - knots[span + r - j])
            temp = vals[r, j] * invd[j + 1, r]
            vals[r, j + 1] = saved + right[r] * temp
            saved = left[j - r] * temp
        vals[j + 1, j + 1] = saved

    ders = np.zeros((nders + 1, p + 1) + x.shape)
    ders[0] = vals[:, p]
    ne = min(nders, p)
    a = np.empty((2, p + 1))
    for r in range(p + 1):
        s1, s2 = 0, 1
        a[0, 0] = 1.0
        for k in range(1, ne + 1):
            d = np.zeros(x.shape)
            rk = r - k
            pk = p - k
            if r >= k:
                a[s2, 0] = a[s1, 0] * invd[pk + 1, rk]
                d = a[s2, 0] * vals[rk, pk]
            j1 = 1 if rk >= -1 else -rk
            j2 = k - 1 if r - 1 <= pk else p - r
            for j in range(j1, j2 + 1):
                a[s2, j] = (a[s1, j] - a[s1, j - 1]) * invd[pk + 1, rk + j]
                d = d + a[s2, j] * vals[rk + j, pk]
            if r <= pk:
                a[s2, k] = -a[s1, k - 1] * invd[pk + 1, r]
                d = d + a[s2, k] * vals[r, pk]
            ders[k, r] = d
            s1, s2 = s2, s1

    fac = float(p)
    for k in range(1, ne + 1):
        ders[k] *= fac
        fac *= p - k
    return ders


def eval_all_derivatives(space: SplineSpace, x: float, nders: int,
                         side: str = "right") -> tuple[int, np.ndarray]:
    """All derivatives 0..nders of the active basis functions at ``x``.

    Returns ``(first, ders)``: ``ders[r, j]`` is the r-th derivative of
    untrimmed basis function ``first + j``, for the p+1 functions supported
    at ``x``.  At an interior knot the ``side`` selects the one-sided limit.
    """
    p = space.degree
    e = _element_index(space.mesh, x, side)
    span = p + e
    ders = _ders_on_span(space.knots, p, x, span, nders)
    return e, ders


def eval_basis(space: SplineSpace, x: float, r: int = 0,
               side: str = "right") -> tuple[np.ndarray, np.ndarray]:
    """r-th derivative of the <= p+1 basis functions supported at ``x``.

    Returns ``(indices, values)`` over the untrimmed basis.  Evaluation at an
    interior knot defaults to the right-limit; pass ``side='left'`` for the
    left one-sided limit (boundary knots fall back to the limit that exists).
    """
    p = space.degree
    if not 0 <= r <= p:
        raise ValueError(f"derivative order must satisfy 0 <= r <= {p}, got {r}")
    first, ders = eval_all_derivatives(space, x, r, side=side)
    return np.arange(first, first + p + 1), ders[r]


def collocation_matrix(space: SplineSpace, points, r: int = 0,
                       trimmed: bool = True) -> np.ndarray:
    """Dense matrix B with B[i, j] = d^r/dx^r phi_j(points[i])."""
    points = np.atleast_1d(np.asarray(points, dtype=float))
    out = np.zeros((points.size, space.n_untrimmed))
    for i, x in enumerate(points):
        idx, vals = eval_basis(space, float(x), r)
        out[i, idx] = vals
    if trimmed:
        out = out[:, 1:-1]
    return out


def pth_derivative_jumps(space: SplineSpace, face: int) -> np.ndarray:
    """Jump of the p-th derivative across a mesh face, per basis function.

    ``face`` indexes breakpoints (0..n).  Interior faces combine the two
    one-sided traces with the outward normals of the adjacent elements,
    ``v^(p)(x-) - v^(p)(x+)``; boundary faces return the single one-sided
    trace times the outward normal.  The result is a dense vector over the
    untrimmed basis with at most 2p+1 structural nonzeros.
    """
    p = space.degree
    n = space.mesh.n_elements
    if not 0 <= face <= n:
        raise ValueError(f"face index must be in 0..{n}, got {face}")
    x = float(space.mesh.breakpoints[face])
    out = np.zeros(space.n_untrimmed)
    if face > 0:
        # left trace carries outward normal +1 (of the left element at an
        # interior face, of the domain at the right boundary)
        first, ders = eval_all_derivatives(space, x, p, side="left")
        out[first:first + p + 1] += ders[p]
    if face < n:
        # right trace carries outward normal -1
        first, ders = eval_all_derivatives(space, x, p, side="right")
        out[first:first + p + 1] -= ders[p]
    return out
