"""
Sparse SPD linear algebra.

Matrices are plain ``scipy.sparse.csr_matrix`` objects in canonical form
(sorted indices, duplicates summed, no stored zeros). The default solver is
a symmetric-mode SuperLU factorization with a minimum-degree ordering on
A + A^T and no off-diagonal pivoting, which for SPD input is a Cholesky
factorization in LU clothing; a Jacobi-preconditioned CG is available as
a fallback.
"""

import numpy as np
from scipy import sparse as sp
from scipy.sparse import linalg as spla

__all__ = ["SolverError", "from_triplets", "SPDFactor", "solve_spd", "pcg"]


class SolverError(RuntimeError):
    """Raised on non-SPD input or failure to reach the residual target."""


def from_triplets(n, entries):
    """
    Build an n x n CSR matrix from (row, col, value) triplets.

    Duplicate entries are summed.

    Raises
    ------
    IndexError
        If an index is outside 0..n-1.
    """
    entries = list(entries)
    if entries:
        rows, cols, vals = (np.asarray(c) for c in zip(*entries))
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
        vals = np.zeros(0)
    return _csr(n, rows, cols, vals)


def _csr(n, rows, cols, vals):
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    if rows.size and (min(rows.min(), cols.min()) < 0 or max(rows.max(), cols.max()) >= n):
        raise IndexError("triplet index out of range for n = {}".format(n))
    A = sp.coo_matrix((np.asarray(vals, dtype=float), (rows, cols)), shape=(n, n)).tocsr()
    A.sum_duplicates()
    A.eliminate_zeros()
    A.sort_indices()
    return A


class SPDFactor:
    """
    Reusable factorization of a sparse SPD matrix.

    Parameters
    ----------
    A : sparse matrix
    tol : float
        Target for the normwise backward error
        |b - A x|_inf / (|A|_inf |x|_inf + |b|_inf) enforced by :meth:`solve`.
    """

    def __init__(self, A, tol=1e-12):
        A = sp.csc_matrix(A, dtype=float)
        if A.shape[0] != A.shape[1]:
            raise SolverError("matrix is not square")
        self.A = A
        self.tol = tol
        self.n = A.shape[0]
        self._norm = float(abs(A).sum(axis=1).max()) if A.nnz else 0.0
        if self.n == 0:
            self._lu = None
            return
        try:
            self._lu = spla.splu(A, permc_spec="MMD_AT_PLUS_A", diag_pivot_thresh=0.0,
                                 options={"SymmetricMode": True})
        except RuntimeError as exc:
            raise SolverError("factorization failed: {}".format(exc)) from exc
        pivots = self._lu.U.diagonal()
        if not np.all(pivots > 0):
            raise SolverError("matrix is not SPD (nonpositive pivot)")

    def solve(self, b):
        """Solve A x = b (b may hold several columns)."""
        b = np.asarray(b, dtype=float)
        if self.n == 0:
            return np.zeros_like(b)
        x = self._lu.solve(b)
        for _ in range(3):
            r = b - self.A @ x
            if self._backward_ok(r, x, b):
                return x
            x = x + self._lu.solve(r)
        if not self._backward_ok(b - self.A @ x, x, b):
            raise SolverError("backward error target {:.1e} not reached".format(self.tol))
        return x

    def _backward_ok(self, r, x, b):
        scale = self._norm * np.abs(x).max(initial=0.0) + np.abs(b).max(initial=0.0)
        return np.abs(r).max(initial=0.0) <= self.tol * scale


def pcg(A, b, tol=1e-12, maxiter=None):
    """Jacobi-preconditioned conjugate gradients with a curvature check."""
    A = sp.csr_matrix(A)
    b = np.asarray(b, dtype=float)
    n = len(b)
    maxiter = 10 * n + 100 if maxiter is None else maxiter
    diag = A.diagonal()
    if np.any(diag <= 0):
        raise SolverError("matrix is not SPD (nonpositive diagonal)")
    bnorm = np.linalg.norm(b)
    x = np.zeros(n)
    if bnorm == 0:
        return x
    r = b.copy()
    z = r / diag
    d = z.copy()
    rz = r @ z
    for _ in range(maxiter):
        Ad = A @ d
        curv = d @ Ad
        if curv <= 0:
            raise SolverError("matrix is not SPD (negative curvature)")
        step = rz / curv
        x += step * d
        r -= step * Ad
        if np.linalg.norm(r) <= tol * bnorm:
            return x
        z = r / diag
        rz_new = r @ z
        d = z + (rz_new / rz) * d
        rz = rz_new
    raise SolverError("CG did not converge in {} iterations".format(maxiter))


def solve_spd(A, b, tol=1e-12, method="cholesky"):
    """
    Solve the SPD system A x = b to relative residual ``tol``.

    ``method`` is ``"cholesky"`` (default) or ``"cg"``.
    """
    if method == "cholesky":
        return SPDFactor(A, tol).solve(b)
    if method == "cg":
        return pcg(A, b, tol)
    raise ValueError("unknown method {!r}".format(method))
