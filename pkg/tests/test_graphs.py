import itertools

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from fiedler_inverse import (
    Branch,
    Cycle,
    Tree,
    WeightAssignment,
    branches_at,
    dirichlet_incidence,
    path_matrix,
    tree_from_pruefer,
)
from fiedler_inverse.errors import (
    BoundaryNotLeafError,
    InvalidGraphError,
    InvalidVertexError,
    InvalidWeightError,
)


def all_trees(n):
    """Every labeled tree on n vertices, via its Pruefer sequence."""
    if n == 1:
        yield Tree(1, ())
        return
    if n == 2:
        yield Tree(2, ((0, 1),))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(n, list(seq))


def test_edges_canonicalized_and_sorted():
    t = Tree(4, ((2, 1), (3, 2), (1, 0)))
    assert t.edges == ((0, 1), (1, 2), (2, 3))


def test_rejects_wrong_edge_count():
    with pytest.raises(InvalidGraphError):
        Tree(4, ((0, 1), (1, 2)))


def test_rejects_disconnected():
    # right count, but a triangle plus an isolated vertex
    with pytest.raises(InvalidGraphError):
        Tree(4, ((0, 1), (1, 2), (0, 2)))


def test_rejects_self_loop_and_bad_labels():
    with pytest.raises(InvalidGraphError):
        Tree(3, ((0, 0), (1, 2)))
    with pytest.raises(InvalidGraphError):
        Tree(3, ((0, 1), (1, 3)))


def test_neighbors_and_degree(tree1):
    assert tree1.neighbors(0) == (1, 4, 7)
    assert tree1.degree(1) == 3
    assert tree1.degree(8) == 1
    with pytest.raises(InvalidVertexError):
        tree1.neighbors(9)


def test_cycle_structure():
    c = Cycle(5)
    assert c.edge_pairs == ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
    assert c.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    assert c.neighbors(0) == (1, 4)
    with pytest.raises(InvalidGraphError):
        Cycle(2)


def test_branches_partition_the_tree(tree1):
    for v in range(tree1.n):
        branches = branches_at(tree1, v)
        assert len(branches) == tree1.degree(v)
        interiors = [set(b.interior) for b in branches]
        seen = set().union(*interiors)
        assert seen == set(range(tree1.n)) - {v}
        assert sum(len(s) for s in interiors) == tree1.n - 1
        for b in branches:
            assert b.boundary == v
            assert b.boundary_degree() == 1


def test_branch_order_follows_attachment_vertex(tree1):
    branches = branches_at(tree1, 0)
    attach = [min(set(b.vertices) & set(tree1.neighbors(0))) for b in branches]
    assert attach == sorted(attach) == [1, 4, 7]


def test_branch_as_tree_relabels():
    t = Tree(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
    branch = branches_at(t, 0)[0]
    small, mapping = branch.as_tree()
    assert small.n == 5
    assert mapping[0] == 0
    # relabeling preserves adjacency
    for i, j in branch.edges:
        assert (min(mapping[i], mapping[j]), max(mapping[i], mapping[j])) in small.edges


def test_dirichlet_incidence_worked_example():
    # star at vertex 1 with boundary leaf 0: interior rows 1,2,3 and
    # columns for edges (0,1), (1,2), (1,3)
    t = Tree(4, ((0, 1), (1, 2), (1, 3)))
    branch = Branch(t, 0, tuple(range(4)), t.edges)
    n_r = dirichlet_incidence(branch)
    assert n_r.dtype == np.int64
    assert_array_equal(n_r, [[1, -1, -1], [0, 1, 0], [0, 0, 1]])
    p = path_matrix(branch)
    assert_array_equal(p, [[1, 1, 1], [0, 1, 0], [0, 0, 1]])
    assert_array_equal(n_r @ p, np.eye(3, dtype=np.int64))


def test_dirichlet_incidence_needs_leaf_boundary():
    t = Tree(3, ((0, 1), (1, 2)))
    branch = Branch(t, 1, (0, 1, 2), t.edges)
    with pytest.raises(BoundaryNotLeafError):
        dirichlet_incidence(branch)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_path_matrix_inverts_incidence_exhaustively(n):
    # exact integer inverse for every branch of every labeled tree
    for t in all_trees(n):
        for v in range(n):
            for branch in branches_at(t, v):
                n_r = dirichlet_incidence(branch)
                p = path_matrix(branch)
                assert_array_equal(n_r @ p, np.eye(len(branch.interior), dtype=np.int64))
                assert_array_equal(p @ n_r, np.eye(len(branch.interior), dtype=np.int64))


def test_path_matrix_marks_boundary_paths():
    # path 0-1-2-3-4 rooted at 0: edge (i,i+1) lies on the path from v
    # to the boundary exactly when v > i
    t = Tree(5, tuple((i, i + 1) for i in range(4)))
    branch = Branch(t, 0, tuple(range(5)), t.edges)
    p = path_matrix(branch)
    expect = np.triu(np.ones((4, 4), dtype=np.int64))
    assert_array_equal(p, expect)


def test_weight_assignment_canonicalizes_and_validates():
    w = WeightAssignment.from_values(((1, 0), (2, 1)), [2.0, 3.0])
    assert w[(0, 1)] == 2.0
    assert w[(1, 0)] == 2.0
    with pytest.raises(InvalidWeightError):
        WeightAssignment({(0, 1): -1.0})
    with pytest.raises(InvalidWeightError):
        WeightAssignment({(0, 1): np.inf})


def test_weight_assignment_domain_check(tree1):
    w = WeightAssignment({e: 1.0 for e in tree1.edges})
    assert w.for_graph(tree1) is not None
    short = WeightAssignment({e: 1.0 for e in tree1.edges[:-1]})
    with pytest.raises(InvalidWeightError):
        short.for_graph(tree1)


def test_weight_alignment_orders_values(tree1):
    w = WeightAssignment({e: float(i + 1) for i, e in enumerate(tree1.edges)})
    assert_array_equal(w.aligned(tree1.edges), np.arange(1.0, 9.0))
