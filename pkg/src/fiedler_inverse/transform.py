"""Bijection between the two kinds of characteristic sets.

A weighted tree whose characteristic vertex r has degree 2 can be
contracted: remove r and join its neighbors by the series weight
w_p w_q / (w_p + w_q).  A weighted tree with a characteristic edge can
be subdivided: insert a new vertex r on the edge and split the weight
according to the eigenvector ratio across the edge.  Both moves
preserve the algebraic connectivity, and the eigenvectors correspond by
deleting/padding the zero entry at r.

Membership in either class is recomputed from the eigendecomposition at
call time; nothing is trusted from the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotInDomainError
from .graphs import Tree, WeightAssignment
from .spectral import (
    CharacteristicSet,
    FiedlerData,
    WeightedLaplacian,
    fiedler,
    laplacian,
    locate_characteristic_set,
)


@dataclass(frozen=True)
class WeightedTree:
    """A tree with positive edge weights plus cached spectral data."""

    tree: Tree
    weights: WeightAssignment

    def __post_init__(self):
        self.weights.for_graph(self.tree)

    @cached_property
    def laplacian(self) -> WeightedLaplacian:
        return laplacian(self.tree, self.weights)

    @cached_property
    def fiedler_data(self) -> FiedlerData:
        return fiedler(self.laplacian)

    @cached_property
    def char_set(self) -> CharacteristicSet:
        return locate_characteristic_set(self.laplacian)


@dataclass(frozen=True)
class ContractionResult:
    weighted_tree: WeightedTree
    removed_vertex: int
    vertex_map: dict[int, int]


@dataclass(frozen=True)
class SubdivisionResult:
    weighted_tree: WeightedTree
    new_vertex: int
    split_edge: tuple[int, int]


def contract(wt: WeightedTree) -> ContractionResult:
    """Contract out a degree-2 characteristic vertex.

    Requires the characteristic set to be a single vertex of degree 2.
    The removed label disappears and every label above it shifts down by
    one; the two incident weights merge in series.
    """
    cs = wt.char_set
    if cs.kind != "TypeI":
        raise NotInDomainError(
            f"contraction needs a characteristic vertex, found {cs.kind} {cs.vertices}"
        )
    r = cs.vertices[0]
    if wt.tree.degree(r) != 2:
        raise NotInDomainError(
            f"characteristic vertex {r} has degree {wt.tree.degree(r)}, need 2"
        )
    p, q = wt.tree.neighbors(r)
    w_p = wt.weights[(p, r)]
    w_q = wt.weights[(q, r)]
    merged = w_p * w_q / (w_p + w_q)
    vmap = {v: (v if v < r else v - 1) for v in range(wt.tree.n) if v != r}
    new_weights = {}
    for (i, j), w in wt.weights.weights.items():
        if r in (i, j):
            continue
        new_weights[(vmap[i], vmap[j])] = w
    new_weights[(vmap[p], vmap[q])] = merged
    new_tree = Tree(wt.tree.n - 1, tuple(sorted(new_weights)))
    return ContractionResult(
        WeightedTree(new_tree, WeightAssignment(new_weights)),
        removed_vertex=r,
        vertex_map=vmap,
    )


def subdivide(wt: WeightedTree) -> SubdivisionResult:
    """Split a characteristic edge by inserting a new zero vertex.

    The new vertex takes the next unused label n.  With eigenvector
    values x_i, x_j across the split edge of weight w, the endpoint i
    receives the piece w (1 - x_j / x_i); the signs of x_i and x_j are
    opposite, so both pieces are positive and exceed w.
    """
    cs = wt.char_set
    if cs.kind != "TypeII":
        raise NotInDomainError(
            f"subdivision needs a characteristic edge, found {cs.kind} {cs.vertices}"
        )
    i, j = cs.vertices
    w = wt.weights[(i, j)]
    x = wt.fiedler_data.basis[:, 0]
    new = wt.tree.n
    new_weights = {}
    for e, value in wt.weights.weights.items():
        if e != (i, j):
            new_weights[e] = value
    new_weights[(i, new)] = w * (1.0 - x[j] / x[i])
    new_weights[(j, new)] = w * (1.0 - x[i] / x[j])
    new_tree = Tree(new + 1, tuple(sorted(new_weights)))
    return SubdivisionResult(
        WeightedTree(new_tree, WeightAssignment(new_weights)),
        new_vertex=new,
        split_edge=(i, j),
    )
