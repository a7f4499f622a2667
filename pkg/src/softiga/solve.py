"""Generalized symmetric eigensolver for the softened pencil (A, M).

Solves A u = mu M u for the k smallest eigenvalues, where A is the softened
stiffness (including the shifted potential) and M the mass matrix, then
un-shifts to physical eigenvalues lambda = mu - gamma0.

Strategy: dense LAPACK solve up to ``dense_threshold`` unknowns, otherwise
shift-invert Lanczos (ARPACK) at sigma = 0 backed by a sparse LU of A.  A is
positive definite for admissible softness; a non-positive pivot during the
factorization signals eta >= eta_max and raises ``SoftnessTooLarge``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .splines import SplineSpace, collocation_matrix

__all__ = [
    "EigenResult",
    "ErrorRecord",
    "SolverError",
    "SoftnessTooLarge",
    "NoConvergence",
    "SingularMass",
    "solve_smallest",
    "eigen_error",
    "sample_eigenfunction",
]

DENSE_THRESHOLD = 2000
DEFAULT_TOL = 1e-10


class SolverError(RuntimeError):
    """Base class for eigensolver failures."""


class SoftnessTooLarge(SolverError):
    """K - eta*S lost positive definiteness: eta >= eta_max."""


class NoConvergence(SolverError):
    """Iteration cap reached with residuals above tolerance."""


class SingularMass(SolverError):
    """Mass matrix factorization failed."""


@dataclass
class EigenResult:
    """Physical eigenvalues (ascending), M-orthonormal coefficient vectors
    (N x k, sign-fixed: largest-magnitude entry positive), residual norms
    ||A u - mu M u||_2 per pair, and the iteration count (0 = direct)."""

    eigenvalues: np.ndarray
    vectors: np.ndarray
    residuals: np.ndarray
    iterations: int
    shift: float


@dataclass(frozen=True)
class ErrorRecord:
    index: int
    computed: float
    reference: float

    @property
    def error(self) -> float:
        return abs(self.computed - self.reference)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    for j in range(vectors.shape[1]):
        i = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[i, j] < 0:
            vectors[:, j] = -vectors[:, j]
    return vectors


def _dense_solve(A: np.ndarray, M: np.ndarray, k: int):
    try:
        np.linalg.cholesky(M)
    except np.linalg.LinAlgError as exc:
        raise SingularMass("mass matrix is not positive definite") from exc
    try:
        np.linalg.cholesky(A)
    except np.linalg.LinAlgError as exc:
        raise SoftnessTooLarge(
            "softened stiffness is not positive definite; "
            "softness parameter is at or above eta_max") from exc
    mu, vec = scipy.linalg.eigh(A, M, subset_by_index=(0, k - 1))
    return mu, vec, 0


def _pd_factorize(A: sp.csc_matrix) -> spla.SuperLU:
    """Sparse LU with symmetric-mode diagonal pivoting; raises
    SoftnessTooLarge on a non-positive pivot (A not positive definite)."""
    try:
        lu = spla.splu(A, permc_spec="MMD_AT_PLUS_A", diag_pivot_thresh=0.0,
                       options=dict(SymmetricMode=True))
    except RuntimeError as exc:  # exactly singular
        raise SoftnessTooLarge(
            "softened stiffness factorization hit a zero pivot") from exc
    if np.any(lu.U.diagonal() <= 0):
        raise SoftnessTooLarge(
            "softened stiffness is not positive definite; "
            "softness parameter is at or above eta_max")
    return lu


def _sparse_solve(A: sp.spmatrix, M: sp.spmatrix, k: int, tol: float):
    n = A.shape[0]
    lu = _pd_factorize(A.tocsc())
    applications = [0]

    def apply_inverse(x):
        applications[0] += 1
        return lu.solve(x)

    opinv = spla.LinearOperator((n, n), matvec=apply_inverse, dtype=float)
    rng = np.random.default_rng(0)
    v0 = rng.standard_normal(n)
    try:
        mu, vec = spla.eigsh(A, k=k, M=M.tocsr(), sigma=0.0, which="LM",
                             OPinv=opinv, v0=v0, maxiter=max(1000, 50 * k),
                             tol=0)
    except spla.ArpackNoConvergence as exc:
        raise NoConvergence(f"Lanczos did not converge: {exc}") from exc
    return mu, vec, applications[0]


def solve_smallest(ktilde: sp.spmatrix, mass: sp.spmatrix, k: int,
                   tol: float = DEFAULT_TOL, gamma0: float = 0.0,
                   dense_threshold: int = DENSE_THRESHOLD) -> EigenResult:
    """k smallest eigenpairs of the pencil (ktilde, mass), un-shifted.

    Raises ``SoftnessTooLarge`` / ``SingularMass`` on factorization failure
    and ``NoConvergence`` if residuals exceed tol * ||ktilde||_inf.
    """
    n = ktilde.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got k={k}")
    A = sp.csr_matrix(ktilde)
    M = sp.csr_matrix(mass)
    if n <= dense_threshold or k >= n - 1:
        mu, vec, its = _dense_solve(A.toarray(), M.toarray(), k)
    else:
        mu, vec, its = _sparse_solve(A, M, k, tol)
    order = np.argsort(mu)
    mu = mu[order]
    vec = _fix_signs(vec[:, order])
    residuals = np.linalg.norm(A @ vec - M @ vec * mu[None, :], axis=0)
    norm_a = float(np.max(np.abs(A).sum(axis=1)))
    if np.any(residuals > tol * norm_a):
        raise NoConvergence(
            f"residuals {residuals} exceed {tol} * ||A||_inf = {tol * norm_a:g}")
    return EigenResult(eigenvalues=mu - gamma0, vectors=vec,
                       residuals=residuals, iterations=its, shift=gamma0)


def eigen_error(result: EigenResult, reference) -> list[ErrorRecord]:
    """Per-index absolute differences |lambda_j - reference_j|."""
    reference = np.asarray(reference, dtype=float)
    computed = result.eigenvalues
    if reference.size < computed.size:
        raise ValueError(
            f"reference holds {reference.size} values, need >= {computed.size}")
    return [ErrorRecord(index=j, computed=float(computed[j]),
                        reference=float(reference[j]))
            for j in range(computed.size)]


def sample_eigenfunction(spaces, vector: np.ndarray, grid):
    """Evaluate u = sum_j U_j phi_j on a point grid.

    1D: ``spaces`` is a SplineSpace and ``grid`` an array of points, giving
    values of shape (m,).  2D: ``spaces = (space_x, space_y)`` and
    ``grid = (xs, ys)``, giving the tensor-product evaluation of shape
    (len(xs), len(ys)).  Grid points outside the domain raise ValueError.
    """
    vector = np.asarray(vector, dtype=float)
    if isinstance(spaces, SplineSpace):
        if vector.size != spaces.dimension:
            raise ValueError(
                f"coefficient length {vector.size} != dimension {spaces.dimension}")
        B = collocation_matrix(spaces, grid)
        return B @ vector
    space_x, space_y = spaces
    xs, ys = grid
    nx, ny = space_x.dimension, space_y.dimension
    if vector.size != nx * ny:
        raise ValueError(f"coefficient length {vector.size} != {nx}*{ny}")
    Bx = collocation_matrix(space_x, xs)
    By = collocation_matrix(space_y, ys)
    return Bx @ vector.reshape(nx, ny) @ By.T
