"""Combinatorial layer: trees, cycles, branches, and edge-indexed weights.

Vertices are 0-based everywhere in the library.  Edges are canonical
``(i, j)`` tuples with ``i < j``; edge lists are kept in lexicographic
order so every matrix built downstream has a reproducible row/column
layout.  Incidence and path matrices are exact integer arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BoundaryNotLeafError,
    InvalidGraphError,
    InvalidVertexError,
    InvalidWeightError,
)


def _canonical_edges(n, edges):
    """Validate and canonicalize an edge list; returns sorted (i, j) tuples."""
    out = []
    seen = set()
    for e in edges:
        i, j = e
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidVertexError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
        if i == j:
            raise InvalidGraphError(f"self-loop at vertex {i}")
        pair = (i, j) if i < j else (j, i)
        if pair in seen:
            raise InvalidGraphError(f"duplicate edge {pair}")
        seen.add(pair)
        out.append(pair)
    out.sort()
    return tuple(out)


def _is_connected(n, edges):
    if n == 0:
        return False
    adj = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices 0..n-1.

    Attributes:
        n: number of vertices (n >= 1).
        edges: the n-1 canonical edges in lexicographic order.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidGraphError(f"tree needs at least one vertex, got n={self.n}")
        edges = _canonical_edges(self.n, self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.n - 1:
            raise InvalidGraphError(
                f"tree on {self.n} vertices needs {self.n - 1} edges, got {len(edges)}"
            )
        if not _is_connected(self.n, edges):
            raise InvalidGraphError("edge list is not connected")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class Cycle:
    """The cycle on vertices 0..n-1 with edge j joining j and j+1 (mod n).

    Edge positions matter for the inverse construction, so ``edge_pairs``
    lists canonical pairs in *position* order e_0, ..., e_{n-1}; the last
    entry is (0, n-1).
    """

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidGraphError(f"cycle needs at least 3 vertices, got n={self.n}")

    @cached_property
    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        pairs = [(j, j + 1) for j in range(self.n - 1)]
        pairs.append((0, self.n - 1))
        return tuple(pairs)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Canonical edges in lexicographic order (the set view)."""
        return tuple(sorted(self.edge_pairs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} outside 0..{self.n - 1}")
        return tuple(sorted(((v - 1) % self.n, (v + 1) % self.n)))


@dataclass(frozen=True)
class Branch:
    """A subtree of ``tree`` hanging off a boundary vertex.

    ``vertices`` always contains the boundary; ``edges`` are the induced
    tree edges.  ``interior`` (everything except the boundary, ascending)
    fixes the row order of the Dirichlet incidence matrix, and ``edges``
    (lexicographic) fixes its column order.
    """

    tree: Tree
    boundary: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vertices)))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if self.boundary not in vs:
            raise InvalidGraphError(f"boundary {self.boundary} not among branch vertices")
        vset = set(vs)
        tree_edges = set(self.tree.edges)
        for e in self.edges:
            if e not in tree_edges:
                raise InvalidGraphError(f"edge {e} is not an edge of the parent tree")
            if e[0] not in vset or e[1] not in vset:
                raise InvalidGraphError(f"edge {e} leaves the branch vertex set")
        if len(self.edges) != len(vs) - 1 or (len(vs) > 1 and not _subset_connected(vs, self.edges)):
            raise InvalidGraphError("branch is not a tree on its vertex set")

    @cached_property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v != self.boundary)

    @cached_property
    def rooted(self) -> tuple[dict[int, int], tuple[int, ...]]:
        """(parent map, BFS order from the boundary).  Boundary maps to -1."""
        adj = {v: [] for v in self.vertices}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        parent = {self.boundary: -1}
        order = [self.boundary]
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for v in sorted(adj[u]):
                if v not in parent:
                    parent[v] = u
                    order.append(v)
        return parent, tuple(order)

    def boundary_degree(self) -> int:
        return sum(1 for e in self.edges if self.boundary in e)

    def as_tree(self) -> tuple[Tree, dict[int, int]]:
        """The branch as a standalone tree on 0..k-1, plus old->new labels."""
        relabel = {v: k for k, v in enumerate(self.vertices)}
        edges = tuple((relabel[i], relabel[j]) for i, j in self.edges)
        return Tree(len(self.vertices), edges), relabel


def _subset_connected(vertices, edges):
    adj = {v: [] for v in vertices}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    start = vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(vertices)


@dataclass(frozen=True)
class WeightAssignment:
    """Positive weights indexed by canonical edge pairs."""

    weights: dict[tuple[int, int], float]

    def __post_init__(self):
        canon = {}
        for (i, j), w in self.weights.items():
            pair = (i, j) if i < j else (j, i)
            w = float(w)
            if not np.isfinite(w) or w <= 0.0:
                raise InvalidWeightError(f"weight for edge {pair} must be positive, got {w!r}")
            if pair in canon:
                raise InvalidWeightError(f"edge {pair} assigned twice")
            canon[pair] = w
        object.__setattr__(self, "weights", canon)

    @classmethod
    def from_values(cls, edges, values) -> "WeightAssignment":
        """Pair an edge sequence with a value sequence of the same length."""
        edges = list(edges)
        values = list(values)
        if len(edges) != len(values):
            raise InvalidWeightError(
                f"{len(edges)} edges but {len(values)} weights"
            )
        return cls(dict(zip(edges, values)))

    def for_graph(self, graph) -> "WeightAssignment":
        """Check the domain is exactly the graph's edge set; returns self."""
        have = set(self.weights)
        want = set(graph.edges)
        if have != want:
            missing = sorted(want - have)
            extra = sorted(have - want)
            raise InvalidWeightError(
                f"weight domain mismatch: missing {missing}, extra {extra}"
            )
        return self

    def __getitem__(self, pair) -> float:
        i, j = pair
        key = (i, j) if i < j else (j, i)
        if key not in self.weights:
            raise InvalidWeightError(f"no weight assigned to edge {key}")
        return self.weights[key]

    def aligned(self, edges) -> np.ndarray:
        """Weight vector aligned with the given edge sequence."""
        return np.array([self[e] for e in edges], dtype=float)


def branches_at(tree: Tree, v: int) -> tuple[Branch, ...]:
    """The branches of ``tree`` at vertex ``v``, one per component of T - v.

    Each branch consists of one component plus ``v`` itself, so ``v`` is a
    leaf of every branch.  Branches are ordered by their (unique) neighbor
    of ``v``, ascending, which makes branch indices reproducible.
    """
    if not 0 <= v < tree.n:
        raise InvalidVertexError(f"vertex {v} outside 0..{tree.n - 1}")
    out = []
    for u in tree.neighbors(v):
        comp = {u}
        stack = [u]
        while stack:
            a = stack.pop()
            for b in tree.neighbors(a):
                if b != v and b not in comp:
                    comp.add(b)
                    stack.append(b)
        vs = tuple(sorted(comp | {v}))
        es = tuple(
            e for e in tree.edges
            if (e[0] in comp and e[1] in comp) or e == ((min(u, v), max(u, v)))
        )
        out.append(Branch(tree, v, vs, es))
    return tuple(out)


def dirichlet_incidence(branch: Branch) -> np.ndarray:
    """Integer incidence matrix with the boundary row deleted.

    Rows are the interior vertices (ascending), columns the branch edges
    (lexicographic).  Every edge is oriented toward the boundary: the
    endpoint farther from the boundary gets +1, the nearer one -1 (the
    boundary's own -1 falls away with its row).  Requires the boundary to
    be a leaf of the branch so the matrix is square and invertible.
    """
    if branch.boundary_degree() != 1:
        raise BoundaryNotLeafError(
            f"boundary {branch.boundary} has degree {branch.boundary_degree()} in the branch"
        )
    parent, _ = branch.rooted
    interior = branch.interior
    row = {v: k for k, v in enumerate(interior)}
    m = len(interior)
    n_r = np.zeros((m, m), dtype=np.int64)
    for col, (a, b) in enumerate(branch.edges):
        child = a if parent[a] == b else b
        near = b if child == a else a
        n_r[row[child], col] = 1
        if near != branch.boundary:
            n_r[row[near], col] = -1
    return n_r


def path_matrix(branch: Branch) -> np.ndarray:
    """Exact inverse of the Dirichlet incidence matrix.

    Entry (e, v) is 1 when edge e lies on the path from interior vertex v
    to the boundary, equivalently when v sits in the subtree cut off by e.
    Row order matches the edge order of ``dirichlet_incidence``, column
    order its vertex order.
    """
    if branch.boundary_degree() != 1:
        raise BoundaryNotLeafError(
            f"boundary {branch.boundary} has degree {branch.boundary_degree()} in the branch"
        )
    parent, order = branch.rooted
    interior = branch.interior
    col = {v: k for k, v in enumerate(interior)}
    m = len(interior)
    # subtree membership, accumulated leaves-first
    below = {v: {v} for v in interior}
    for v in reversed(order):
        p = parent[v]
        if p != -1 and p != branch.boundary:
            below[p] |= below[v]
    p_mat = np.zeros((m, m), dtype=np.int64)
    for r, (a, b) in enumerate(branch.edges):
        child = a if parent[a] == b else b
        for v in below[child]:
            p_mat[r, col[v]] = 1
    return p_mat
