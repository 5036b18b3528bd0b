"""Forward spectral machinery for weighted Laplacians.

Builds Laplacians entrywise (diagonal set to the exact negative of the
off-diagonal row sum, so rows cancel to literal zero), exposes Dirichlet
principal submatrices, Perron pairs, the algebraic-connectivity
eigenspace, and the location of the characteristic set of a tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DegeneratePerronError,
    InvalidParameterError,
    NumericalAmbiguityError,
)
from .graphs import Cycle, Tree, WeightAssignment
from .linalg import EigenDecomposition, SymMatrix, eigenvalue_indices, eigh, multiplicity_of

ZERO_RTOL = 1e-7


def zero_tolerance(x: np.ndarray) -> float:
    """Forward-direction zero threshold: 1e-7 * max |x_i|."""
    return ZERO_RTOL * float(np.max(np.abs(x))) if x.size else 0.0


@dataclass(frozen=True)
class WeightedLaplacian:
    graph: object
    weights: WeightAssignment
    matrix: SymMatrix

    @cached_property
    def decomposition(self) -> EigenDecomposition:
        return eigh(self.matrix)

    @property
    def n(self) -> int:
        return self.matrix.n


def laplacian(graph, weights: WeightAssignment) -> WeightedLaplacian:
    """Weighted Laplacian of a tree or cycle: diag(row sums) - weight matrix."""
    weights = weights.for_graph(graph)
    n = graph.n
    a = np.zeros((n, n))
    for i, j in graph.edges:
        w = weights[(i, j)]
        a[i, j] = -w
        a[j, i] = -w
    offdiag_row_sums = a.sum(axis=1)
    for i in range(n):
        a[i, i] = -offdiag_row_sums[i]
    return WeightedLaplacian(graph, weights, SymMatrix(a))


def full_incidence(graph) -> np.ndarray:
    """Oriented incidence matrix N with one column per edge.

    Trees orient each canonical edge (i, j) as -1 at i, +1 at j, columns
    in lexicographic edge order.  Cycles use position order: column j has
    -1 at vertex j and +1 at vertex j+1 (mod n).  Either way
    N diag(w) N^T reproduces the Laplacian.
    """
    n = graph.n
    if isinstance(graph, Cycle):
        cols = graph.edge_pairs
        mat = np.zeros((n, len(cols)), dtype=np.int64)
        for j in range(n):
            mat[j, j] = -1
            mat[(j + 1) % n, j] = 1
        return mat
    cols = graph.edges
    mat = np.zeros((n, len(cols)), dtype=np.int64)
    for c, (i, j) in enumerate(cols):
        mat[i, c] = -1
        mat[j, c] = 1
    return mat


@dataclass(frozen=True)
class DirichletMatrix:
    """Principal submatrix after deleting a boundary set of vertices."""

    matrix: SymMatrix
    kept: tuple[int, ...]
    boundary: tuple[int, ...]

    @cached_property
    def decomposition(self) -> EigenDecomposition:
        return eigh(self.matrix)


def dirichlet_matrix(lap: WeightedLaplacian, boundary) -> DirichletMatrix:
    """Delete the rows and columns of a nonempty proper vertex subset."""
    boundary = tuple(sorted(set(int(v) for v in boundary)))
    n = lap.n
    for v in boundary:
        if not 0 <= v < n:
            raise InvalidParameterError(f"boundary vertex {v} outside 0..{n - 1}")
    if not boundary:
        raise InvalidParameterError("boundary must be nonempty")
    if len(boundary) == n:
        raise InvalidParameterError("boundary covers every vertex; nothing remains")
    kept = tuple(v for v in range(n) if v not in set(boundary))
    sub = lap.matrix.a[np.ix_(kept, kept)]
    return DirichletMatrix(SymMatrix(sub), kept, boundary)


@dataclass(frozen=True)
class PerronPair:
    """Smallest Dirichlet eigenvalue with its positive unit eigenvector."""

    value: float
    vector: np.ndarray


def perron_pair(d: DirichletMatrix) -> PerronPair:
    """Smallest eigenpair of a Dirichlet matrix; must be simple and positive."""
    dec = d.decomposition
    lam = float(dec.eigenvalues[0])
    if multiplicity_of(dec, lam) != 1:
        raise DegeneratePerronError(
            f"smallest eigenvalue {lam} is not simple: {dec.eigenvalues[:3]}"
        )
    vec = dec.eigenvectors[:, 0].copy()
    if vec.sum() < 0.0:
        vec = -vec
    if np.any(vec <= 0.0):
        raise DegeneratePerronError(
            f"smallest eigenvector is not entrywise positive (min {vec.min()})"
        )
    return PerronPair(lam, vec)


@dataclass(frozen=True)
class FiedlerData:
    """Algebraic connectivity with an orthonormal basis of its eigenspace."""

    lambda2: float
    basis: np.ndarray
    multiplicity: int
    decomposition: EigenDecomposition


def fiedler(lap: WeightedLaplacian) -> FiedlerData:
    if lap.n < 2:
        raise InvalidParameterError("algebraic connectivity needs at least 2 vertices")
    dec = lap.decomposition
    lam2 = float(dec.eigenvalues[1])
    idx = [int(i) for i in eigenvalue_indices(dec, lam2) if i != 0]
    basis = dec.eigenvectors[:, idx]
    return FiedlerData(lam2, basis, len(idx), dec)


@dataclass(frozen=True)
class CharacteristicSet:
    """Where a tree eigenvector changes sign: one vertex or one edge.

    kind is "TypeI" (vertices = (r,): the zero vertex adjacent to a
    nonzero entry) or "TypeII" (vertices = (i, j): the endpoints of the
    unique sign-change edge, sorted).
    """

    kind: str
    vertices: tuple[int, ...]


def _char_set_of_vector(tree: Tree, x: np.ndarray, tol: float) -> CharacteristicSet:
    zero = np.abs(x) <= tol
    type1 = [
        v for v in range(tree.n)
        if zero[v] and any(not zero[u] for u in tree.neighbors(v))
    ]
    type2 = [
        (i, j) for i, j in tree.edges
        if not zero[i] and not zero[j] and (x[i] > 0) != (x[j] > 0)
    ]
    if len(type1) == 1 and not type2:
        return CharacteristicSet("TypeI", (type1[0],))
    if len(type2) == 1 and not type1:
        return CharacteristicSet("TypeII", type2[0])
    raise NumericalAmbiguityError(
        f"no unique characteristic set: zero-boundary vertices {type1}, "
        f"sign-change edges {type2}"
    )


def locate_characteristic_set(lap: WeightedLaplacian) -> CharacteristicSet:
    """Characteristic set of the algebraic-connectivity eigenspace of a tree.

    Every orthonormal basis vector must point at the same vertex/edge;
    any disagreement (or any vector without a clean sign pattern) raises
    NumericalAmbiguityError rather than guessing.
    """
    if not isinstance(lap.graph, Tree):
        raise InvalidParameterError("characteristic sets are defined for trees")
    fd = fiedler(lap)
    found = None
    for k in range(fd.basis.shape[1]):
        x = fd.basis[:, k]
        cs = _char_set_of_vector(lap.graph, x, zero_tolerance(x))
        if found is None:
            found = cs
        elif cs != found:
            raise NumericalAmbiguityError(
                f"basis vectors disagree on the characteristic set: {found} vs {cs}"
            )
    return found


def check_sum_identity(lap: WeightedLaplacian, x, lam: float, subset) -> float:
    """Residual of the boundary-flow identity on a vertex subset S.

    For an eigenvector x with eigenvalue lam, the weighted differences
    across the edge boundary of S satisfy
    sum_{ij in bd(S), i in S} w_ij (x_i - x_j) = lam * sum_{i in S} x_i;
    returns the absolute difference of the two sides.
    """
    x = np.asarray(x, dtype=float)
    s = set(int(v) for v in subset)
    for v in s:
        if not 0 <= v < lap.n:
            raise InvalidParameterError(f"subset vertex {v} outside 0..{lap.n - 1}")
    flow = 0.0
    for i, j in lap.graph.edges:
        if (i in s) != (j in s):
            inside, outside = (i, j) if i in s else (j, i)
            flow += lap.weights[(i, j)] * (x[inside] - x[outside])
    mass = lam * sum(x[v] for v in s)
    return abs(flow - mass)
