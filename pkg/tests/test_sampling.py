"""The random generators only promise structure; these tests pin that down
by feeding every draw back through the classifiers."""
import numpy as np
import pytest

from fiedler_inverse import (
    Cycle,
    Tree,
    classify_cycle_vector,
    classify_tree_vector,
    random_fiedler_like,
    random_periodic_balanced,
    random_tree,
    random_type1_vector,
    random_type2_vector,
    random_weights,
    tree_from_pruefer,
)
from fiedler_inverse.errors import InvalidParameterError


def test_pruefer_star():
    t = tree_from_pruefer(6, [3, 3, 3, 3])
    assert t.edges == ((0, 3), (1, 3), (2, 3), (3, 4), (3, 5))


def test_pruefer_textbook_sequence():
    t = tree_from_pruefer(6, [3, 3, 3, 4])
    assert t.edges == ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5))


def test_pruefer_path_cases():
    assert tree_from_pruefer(2, []).edges == ((0, 1),)
    assert tree_from_pruefer(3, [0]).edges == ((0, 1), (0, 2))


def test_random_tree_is_valid(rng):
    for n in (2, 3, 7, 16):
        t = random_tree(n, rng)
        assert isinstance(t, Tree)
        assert t.n == n
        assert len(t.edges) == n - 1


def test_random_tree_deterministic():
    a = random_tree(12, np.random.default_rng(7))
    b = random_tree(12, np.random.default_rng(7))
    assert a.edges == b.edges


def test_random_weights_cover_edges(rng):
    t = random_tree(9, rng)
    w = random_weights(t, rng)
    for pair in t.edges:
        assert 0.5 <= w[pair] <= 2.0
    w2 = random_weights(Cycle(6), rng, low=3.0, high=4.0)
    for pair in Cycle(6).edge_pairs:
        assert 3.0 <= w2[pair] <= 4.0


def test_type1_draws_classify(rng):
    for n in (4, 6, 11):
        for _ in range(10):
            t = random_tree(n, rng)
            v = max(range(t.n), key=t.degree)
            x = random_type1_vector(t, rng, char_vertex=v)
            verdict = classify_tree_vector(t, x)
            assert verdict.kind == "TypeI"
            assert verdict.char_set == (v,)


def test_type1_free_vertex_choice(rng):
    for _ in range(20):
        t = random_tree(8, rng)
        x = random_type1_vector(t, rng)
        assert classify_tree_vector(t, x).kind == "TypeI"


def test_type2_draws_classify(rng):
    for n in (2, 5, 9):
        for _ in range(10):
            t = random_tree(n, rng)
            x = random_type2_vector(t, rng)
            verdict = classify_tree_vector(t, x)
            assert verdict.kind == "TypeII"


def test_type2_edge_choice(rng):
    t = tree_from_pruefer(6, [3, 3, 3, 4])
    x = random_type2_vector(t, rng, edge=(3, 4))
    verdict = classify_tree_vector(t, x)
    assert verdict.char_set == (3, 4)
    assert np.sum(x) == pytest.approx(0.0, abs=1e-12)


def test_fiedler_like_always_admissible(rng):
    for _ in range(30):
        t = random_tree(7, rng)
        x = random_fiedler_like(t, rng)
        assert classify_tree_vector(t, x).kind in ("TypeI", "TypeII")


def test_periodic_balanced_strata(rng):
    for n in (4, 7, 12):
        for zeros in (0, 1, 2):
            x = random_periodic_balanced(n, rng, zeros=zeros)
            verdict = classify_cycle_vector(Cycle(n), x)
            assert verdict.periodic and verdict.balanced
            assert int(np.sum(x == 0.0)) == zeros


def test_periodic_balanced_default_zero_count(rng):
    counts = {int(np.sum(random_periodic_balanced(10, rng) == 0.0)) for _ in range(60)}
    assert counts == {0, 1, 2}


def test_periodic_balanced_rejects_bad_zero_count(rng):
    with pytest.raises(InvalidParameterError):
        random_periodic_balanced(8, rng, zeros=3)


def test_sampling_deterministic_under_seed():
    draws = []
    for _ in range(2):
        rng = np.random.default_rng(99)
        t = random_tree(10, rng)
        draws.append((t.edges, tuple(random_type1_vector(t, rng)),
                      tuple(random_periodic_balanced(9, rng))))
    assert draws[0] == draws[1]
