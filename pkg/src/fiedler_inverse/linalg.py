"""Dense symmetric eigensolver and exact structured solves.

The eigensolver is classical cyclic Jacobi: sweep the strict upper
triangle in row order, annihilate each pivot with a stable rotation,
stop once the off-diagonal Frobenius norm drops below 1e-13 times the
input's Frobenius norm (hard cap 100 sweeps).  The rotation order is
fixed, so results are deterministic across runs and platforms; no BLAS
is involved.  The sweep kernel is JIT-compiled when numba is available
and falls back to the identical pure-Python loops otherwise (no
fastmath, so both paths produce the same bits).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisionStructureError, InvalidInputError

OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100
MULTIPLICITY_RTOL = 1e-8


def _jacobi_kernel(a, v, thresh, max_sweeps):
    n = a.shape[0]
    sweeps = 0
    while sweeps < max_sweeps:
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        if math.sqrt(off) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = a[p, p]
                aqq = a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k != p and k != q:
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[p, k] = a[k, p]
                        a[k, q] = s * akp + c * akq
                        a[q, k] = a[k, q]
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        sweeps += 1
    return sweeps


try:  # pragma: no cover - exercised implicitly
    from numba import njit

    _jacobi_kernel = njit(cache=True)(_jacobi_kernel)
except ImportError:  # pragma: no cover
    pass


@dataclass(frozen=True)
class SymMatrix:
    """A dense symmetric matrix; symmetry and finiteness checked exactly."""

    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidInputError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InvalidInputError("matrix has non-finite entries")
        if a.size and np.max(np.abs(a - a.T)) != 0.0:
            raise InvalidInputError("matrix is not exactly symmetric")
        object.__setattr__(self, "a", a)

    @property
    def n(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues ascending; eigenvectors as matching orthonormal columns.

    Each eigenvector is sign-normalized: its first entry of largest
    magnitude is nonnegative, so the decomposition of a given matrix is
    unique and reproducible.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int


def eigh(a) -> EigenDecomposition:
    """Full eigendecomposition of a symmetric matrix via cyclic Jacobi."""
    if not isinstance(a, SymMatrix):
        a = SymMatrix(np.asarray(a))
    work = a.a.copy()
    n = work.shape[0]
    vecs = np.eye(n)
    thresh = OFF_DIAGONAL_TOL * np.linalg.norm(a.a, "fro")
    sweeps = int(_jacobi_kernel(work, vecs, thresh, MAX_SWEEPS))
    vals = np.diag(work).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]
    for k in range(n):
        lead = np.argmax(np.abs(vecs[:, k]))
        if vecs[lead, k] < 0.0:
            vecs[:, k] = -vecs[:, k]
    return EigenDecomposition(vals, vecs, sweeps)


def multiplicity_of(dec: EigenDecomposition, lam: float, rtol: float = MULTIPLICITY_RTOL) -> int:
    """How many eigenvalues lie within rtol*max(1, |lam|) of lam."""
    tol = rtol * max(1.0, abs(lam))
    return int(np.count_nonzero(np.abs(dec.eigenvalues - lam) <= tol))


def eigenvalue_indices(dec: EigenDecomposition, lam: float, rtol: float = MULTIPLICITY_RTOL) -> np.ndarray:
    """Positions of the eigenvalues grouped with lam under the same tolerance."""
    tol = rtol * max(1.0, abs(lam))
    return np.flatnonzero(np.abs(dec.eigenvalues - lam) <= tol)


def solve_incidence(n_r: np.ndarray, b) -> np.ndarray:
    """Solve N_r w = b exactly for a boundary-rooted incidence matrix.

    Each column of N_r must hold a single +1 (the endpoint away from the
    boundary) and at most one -1 (the endpoint toward it); each row holds
    exactly one +1.  The solve walks the encoded subtree structure and
    accumulates sums of b -- this is multiplication by the path matrix,
    so no floating-point elimination and no rounding beyond the sums
    themselves.
    """
    n_r = np.asarray(n_r)
    b = np.asarray(b, dtype=float)
    m = n_r.shape[0]
    if n_r.ndim != 2 or n_r.shape[1] != m:
        raise InvalidInputError(f"incidence matrix must be square, got {n_r.shape}")
    if b.shape != (m,):
        raise InvalidInputError(f"right-hand side shape {b.shape} does not match {m}")
    child_row = np.full(m, -1, dtype=np.int64)
    parent_row = np.full(m, -1, dtype=np.int64)
    for e in range(m):
        col = n_r[:, e]
        plus = np.flatnonzero(col == 1)
        minus = np.flatnonzero(col == -1)
        if len(plus) != 1 or len(minus) > 1 or np.count_nonzero(col) != len(plus) + len(minus):
            raise InvalidInputError(f"column {e} is not a boundary-oriented incidence column")
        child_row[e] = plus[0]
        if len(minus):
            parent_row[e] = minus[0]
    edge_of_row = np.full(m, -1, dtype=np.int64)
    for e in range(m):
        if edge_of_row[child_row[e]] != -1:
            raise InvalidInputError(f"row {child_row[e]} is the +1 of two columns")
        edge_of_row[child_row[e]] = e
    # edges whose -1 row is the +1 row of e must be summed into e
    deps = [[] for _ in range(m)]
    roots = []
    for e in range(m):
        if parent_row[e] == -1:
            roots.append(e)
        else:
            deps[edge_of_row[parent_row[e]]].append(e)
    w = np.zeros(m, dtype=float)
    # post-order accumulation over the edge forest
    stack = [(e, False) for e in roots]
    visited = 0
    while stack:
        e, expanded = stack.pop()
        if expanded:
            acc = b[child_row[e]]
            for d in deps[e]:
                acc += w[d]
            w[e] = acc
            visited += 1
        else:
            stack.append((e, True))
            for d in deps[e]:
                stack.append((d, False))
    if visited != m:
        raise InvalidInputError("incidence columns do not form a boundary-rooted forest")
    return w


def entrywise_div(x, y, zero_zero_fill: float) -> np.ndarray:
    """x / y entrywise; exact 0/0 becomes zero_zero_fill, 0 under nonzero raises."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise InvalidInputError(f"shape mismatch {x.shape} vs {y.shape}")
    out = np.empty_like(x)
    for i in range(x.size):
        if y.flat[i] == 0.0:
            if x.flat[i] == 0.0:
                out.flat[i] = zero_zero_fill
            else:
                raise DivisionStructureError(i, x.flat[i])
        else:
            out.flat[i] = x.flat[i] / y.flat[i]
    return out
