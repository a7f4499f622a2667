"""Galerkin assembly of the sparse symmetric operators.

1D: diffusion K, mass M, weighted-mass (potential) Q, and the softness jump
penalty S.  2D operators are composed from the 1D factors with Kronecker
products; only the non-separable potential matrix Q2D needs direct
tensor-element quadrature.

All matrices are returned as scipy CSR and are exactly symmetric: local
contributions are built from commutative products and accumulated in
identical order for (i, j) and (j, i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .meshing import QuadratureRule, map_rule_to_mesh
from .model import ProblemSpec, gamma_hat_field
from .splines import SplineSpace, _ders_on_span, pth_derivative_jumps

__all__ = [
    "SoftnessConfig",
    "assemble_mass",
    "assemble_stiffness",
    "assemble_potential",
    "assemble_softness",
    "soft_stiffness",
    "assemble_potential_2d",
    "assemble_2d",
    "basis_on_elements",
    "export_coo",
]

SOFTNESS_DEGREES = (1, 2)


@dataclass(frozen=True)
class SoftnessConfig:
    """Softness parameter eta >= 0.

    The admissible upper bound eta_max (largest value keeping K - eta*S
    positive definite) is not known in closed form; it is detected at
    factorization time by the eigensolver.
    """

    eta: float = 0.0

    def __post_init__(self):
        if self.eta < 0:
            raise ValueError(f"softness parameter must be >= 0, got {self.eta}")


def basis_on_elements(space: SplineSpace, rule: QuadratureRule,
                      nders: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Basis values/derivatives on the mapped quadrature grid.

    Returns (points, weights, B) with points/weights of shape (n_el, q) and
    B of shape (n_el, nders+1, p+1, q); element e supports untrimmed basis
    functions e..e+p.
    """
    p = space.degree
    points, weights = map_rule_to_mesh(space.mesh, rule)
    n = space.mesh.n_elements
    B = np.empty((n, nders + 1, p + 1, rule.order))
    for e in range(n):
        ders = _ders_on_span(space.knots, p, points[e], p + e, nders)
        B[e] = ders
    return points, weights, B


def _scatter(space: SplineSpace, local: np.ndarray, trimmed: bool) -> sp.csr_matrix:
    """Accumulate per-element local matrices (n_el, p+1, p+1) into CSR."""
    p = space.degree
    n = space.mesh.n_elements
    e = np.arange(n)[:, None, None]
    a = np.arange(p + 1)
    rows = np.broadcast_to(e + a[None, :, None], local.shape)
    cols = np.broadcast_to(e + a[None, None, :], local.shape)
    m = space.n_untrimmed
    out = sp.coo_matrix((local.ravel(), (rows.ravel(), cols.ravel())),
                        shape=(m, m)).tocsr()
    if trimmed:
        out = out[1:-1, 1:-1]
    return out


def _weighted_gram(space: SplineSpace, B: np.ndarray, weights: np.ndarray,
                   trimmed: bool) -> sp.csr_matrix:
    # outer product first so local[e] is symmetric to the last bit
    G = B[:, :, None, :] * B[:, None, :, :]
    local = np.einsum("eabi,ei->eab", G, weights)
    return _scatter(space, local, trimmed)


def assemble_mass(space: SplineSpace, rule: QuadratureRule,
                  trimmed: bool = True) -> sp.csr_matrix:
    """Mass matrix M_kl = int phi_k phi_l; symmetric positive definite."""
    _, weights, B = basis_on_elements(space, rule, 0)
    return _weighted_gram(space, B[:, 0], weights, trimmed)


def assemble_stiffness(space: SplineSpace, rule: QuadratureRule, kappa: float,
                       trimmed: bool = True) -> sp.csr_matrix:
    """Diffusion matrix K_kl = kappa * int phi_k' phi_l'."""
    if kappa <= 0:
        raise ValueError(f"diffusion coefficient must be positive, got {kappa}")
    _, weights, B = basis_on_elements(space, rule, 1)
    return _weighted_gram(space, B[:, 1], kappa * weights, trimmed)


def assemble_potential(space: SplineSpace, rule: QuadratureRule, w,
                       trimmed: bool = True) -> sp.csr_matrix:
    """Weighted mass matrix Q_kl = int w(x) phi_k phi_l for a scalar field w."""
    points, weights, B = basis_on_elements(space, rule, 0)
    return _weighted_gram(space, B[:, 0], weights * w(points), trimmed)


def _face_sizes(space: SplineSpace) -> np.ndarray:
    """Local face size: mean of the adjacent element sizes, one-sided at the
    boundary.  Reduces to the global h on uniform meshes."""
    h = space.mesh.element_sizes
    sizes = np.empty(h.size + 1)
    sizes[0] = h[0]
    sizes[-1] = h[-1]
    sizes[1:-1] = 0.5 * (h[:-1] + h[1:])
    return sizes


def assemble_softness(space: SplineSpace, kappa: float,
                      trimmed: bool = True) -> sp.csr_matrix:
    """Softness penalty S from p-th derivative jumps at mesh faces.

    Odd p sums h_F^{2p-1} * kappa * jump(w) * jump(v) over interior faces;
    even p adds twice the analogous one-sided boundary terms.  Positive
    semidefinite by construction.
    """
    p = space.degree
    if p not in SOFTNESS_DEGREES:
        raise ValueError(
            f"softness penalty supports degrees {SOFTNESS_DEGREES}, got {p}")
    if kappa <= 0:
        raise ValueError(f"diffusion coefficient must be positive, got {kappa}")
    n = space.mesh.n_elements
    m = space.n_untrimmed
    h_face = _face_sizes(space)
    faces = list(range(1, n)) if p % 2 == 1 else list(range(0, n + 1))
    data, rows, cols = [], [], []
    for f in faces:
        jump = pth_derivative_jumps(space, f)
        lo = max(f - 1, 0)
        hi = min(f + p + 1, m)
        j = jump[lo:hi]
        factor = kappa * h_face[f] ** (2 * p - 1)
        if f in (0, n):
            factor *= 2.0  # boundary faces enter with weight 2 for even p
        local = factor * np.outer(j, j)
        idx = np.arange(lo, hi)
        rows.append(np.repeat(idx, idx.size))
        cols.append(np.tile(idx, idx.size))
        data.append(local.ravel())
    out = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(m, m)).tocsr()
    if trimmed:
        out = out[1:-1, 1:-1]
    return out


def soft_stiffness(K: sp.spmatrix, S: sp.spmatrix,
                   cfg: SoftnessConfig) -> sp.csr_matrix:
    """Softened diffusion matrix K - eta*S."""
    if K.shape != S.shape:
        raise ValueError(f"shape mismatch: {K.shape} vs {S.shape}")
    return (K - cfg.eta * S).tocsr()


def _pair_table(space: SplineSpace, B0: np.ndarray, weights: np.ndarray,
                with_weights: bool) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All overlapping trimmed basis pairs (a, c) and the product table
    P[(a, c), g] = phi_a(x_g) * phi_c(x_g) [* w_g] over the global
    quadrature grid g."""
    p = space.degree
    n = space.mesh.n_elements
    nt = space.dimension
    G = n * B0.shape[-1]
    # dense untrimmed collocation on the quad grid, then drop the two
    # boundary functions
    phi = np.zeros((space.n_untrimmed, G))
    q = B0.shape[-1]
    for e in range(n):
        phi[e:e + p + 1, e * q:(e + 1) * q] = B0[e]
    phi = phi[1:-1]
    a_idx, c_idx = [], []
    for a in range(nt):
        lo, hi = max(0, a - p), min(nt - 1, a + p)
        for c in range(lo, hi + 1):
            a_idx.append(a)
            c_idx.append(c)
    a_idx = np.asarray(a_idx)
    c_idx = np.asarray(c_idx)
    P = phi[a_idx] * phi[c_idx]
    if with_weights:
        P *= weights.ravel()[None, :]
    return a_idx, c_idx, P


def assemble_potential_2d(space_x: SplineSpace, space_y: SplineSpace,
                          rule: QuadratureRule, w2d) -> sp.csr_matrix:
    """Direct tensor-element quadrature of the non-separable weight w2d(x, y).

    Returns the trimmed (Nx*Ny) x (Nx*Ny) matrix with entries
    int w2d * phi_a(x) psi_b(y) * phi_c(x) psi_d(y), row index a*Ny + b.
    """
    px_pts, wx, Bx = basis_on_elements(space_x, rule, 0)
    py_pts, wy, By = basis_on_elements(space_y, rule, 0)
    ax, cx, P = _pair_table(space_x, Bx[:, 0], wx, with_weights=True)
    by, dy, R = _pair_table(space_y, By[:, 0], wy, with_weights=True)
    W = w2d(px_pts.ravel()[:, None], py_pts.ravel()[None, :])
    pairs = P @ W @ R.T
    ny = space_y.dimension
    rows = ax[:, None] * ny + by[None, :]
    cols = cx[:, None] * ny + dy[None, :]
    nn = space_x.dimension * ny
    return sp.coo_matrix((pairs.ravel(), (rows.ravel(), cols.ravel())),
                         shape=(nn, nn)).tocsr()


def _kron(A: sp.spmatrix, B: sp.spmatrix) -> sp.csr_matrix:
    return sp.kron(A, B, format="csr")


def assemble_2d(space_x: SplineSpace, space_y: SplineSpace, spec: ProblemSpec,
                rule: QuadratureRule, cfg: SoftnessConfig,
                rule_potential: QuadratureRule | None = None,
                max_unknowns: int = 2_000_000,
                ) -> tuple[sp.csr_matrix, sp.csr_matrix, sp.csr_matrix]:
    """2D operators for the three-body problem on a tensor-product mesh.

    Returns (A, M2, S2) where A = Kx (x) My + Mx (x) Ky + Q2 - eta*S2 is the
    softened stiffness including the shifted potential,
    M2 = Mx (x) My, and S2 = Sx (x) My + Mx (x) Sy.  The directional factors
    carry the anisotropic diffusion coefficients kx, ky.
    """
    if spec.dimension != 2:
        raise ValueError("assemble_2d needs a 2D problem spec")
    if space_x.degree != space_y.degree:
        raise ValueError("directional spaces must share the degree")
    nn = space_x.dimension * space_y.dimension
    if nn > max_unknowns:
        raise ValueError(f"{nn} unknowns exceed the configured cap {max_unknowns}")
    kap = spec.kappa()
    Mx = assemble_mass(space_x, rule)
    My = assemble_mass(space_y, rule)
    Kx = assemble_stiffness(space_x, rule, kap.kx)
    Ky = assemble_stiffness(space_y, rule, kap.ky)
    Q2 = assemble_potential_2d(space_x, space_y, rule_potential or rule,
                               lambda x, y: gamma_hat_field(spec, x, y))
    M2 = _kron(Mx, My)
    p = space_x.degree
    if cfg.eta != 0.0 or p in SOFTNESS_DEGREES:
        Sx = assemble_softness(space_x, kap.kx)
        Sy = assemble_softness(space_y, kap.ky)
        S2 = (_kron(Sx, My) + _kron(Mx, Sy)).tocsr()
    else:
        S2 = sp.csr_matrix((nn, nn))
    A = (_kron(Kx, My) + _kron(Mx, Ky) + Q2 - cfg.eta * S2).tocsr()
    return A, M2, S2


def export_coo(matrix: sp.spmatrix, path) -> None:
    """Plain-text (row, col, value) dump for debugging."""
    coo = matrix.tocoo()
    with open(path, "w") as fh:
        fh.write(f"# {coo.shape[0]} {coo.shape[1]} {coo.nnz}\n")
        for r, c, v in zip(coo.row, coo.col, coo.data):
            fh.write(f"{r} {c} {v!r}\n")
