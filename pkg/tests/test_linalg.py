"""The dense symmetric eigensolver and the exact incidence solver.

numpy.linalg serves as the cross-check oracle here; the library itself
never calls it.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from fiedler_inverse import (
    Branch,
    SymMatrix,
    Tree,
    branches_at,
    dirichlet_incidence,
    eigenvalue_indices,
    eigh,
    entrywise_div,
    multiplicity_of,
    path_matrix,
    solve_incidence,
)
from fiedler_inverse.errors import (
    DivisionStructureError,
    InvalidInputError,
)


def random_symmetric(rng, n, scale=1.0):
    a = rng.standard_normal((n, n)) * scale
    return a + a.T


def test_sym_matrix_rejects_asymmetric():
    with pytest.raises(InvalidInputError):
        SymMatrix(np.array([[1.0, 2.0], [2.0 + 1e-14, 1.0]]))
    with pytest.raises(InvalidInputError):
        SymMatrix(np.array([[1.0, np.nan], [np.nan, 1.0]]))


def test_eigh_matches_numpy(rng):
    for n in (1, 2, 3, 5, 8, 13, 20):
        a = random_symmetric(rng, n)
        dec = eigh(SymMatrix(a))
        ref = np.linalg.eigvalsh(a)
        assert_allclose(dec.eigenvalues, ref, rtol=0, atol=1e-12 * max(1.0, np.abs(ref).max()))


def test_eigh_reconstructs(rng):
    a = random_symmetric(rng, 12)
    dec = eigh(SymMatrix(a))
    v, lam = dec.eigenvectors, dec.eigenvalues
    assert_allclose(v @ np.diag(lam) @ v.T, a, atol=1e-12 * np.abs(a).max())
    assert_allclose(v.T @ v, np.eye(12), atol=1e-13)


def test_eigh_sorted_and_sign_normalized(rng):
    a = random_symmetric(rng, 9)
    dec = eigh(SymMatrix(a))
    assert np.all(np.diff(dec.eigenvalues) >= 0)
    for k in range(9):
        col = dec.eigenvectors[:, k]
        assert col[np.argmax(np.abs(col))] >= 0


def test_eigh_deterministic(rng):
    a = random_symmetric(rng, 7)
    d1 = eigh(SymMatrix(a.copy()))
    d2 = eigh(SymMatrix(a.copy()))
    assert_array_equal(d1.eigenvalues, d2.eigenvalues)
    assert_array_equal(d1.eigenvectors, d2.eigenvectors)


def test_eigh_diagonal_is_exact():
    dec = eigh(SymMatrix(np.diag([3.0, -1.0, 2.0])))
    assert_array_equal(dec.eigenvalues, [-1.0, 2.0, 3.0])
    assert dec.sweeps == 0


def test_eigh_scale_invariance(rng):
    # the sweep threshold is relative, so tiny matrices converge too
    a = random_symmetric(rng, 6, scale=1e-12)
    dec = eigh(SymMatrix(a))
    ref = np.linalg.eigvalsh(a)
    assert_allclose(dec.eigenvalues, ref, rtol=0, atol=1e-24)


def test_multiplicity_queries():
    dec = eigh(SymMatrix(np.diag([0.0, 1.0, 1.0 + 1e-12, 4.0])))
    assert multiplicity_of(dec, 1.0) == 2
    assert multiplicity_of(dec, 4.0) == 1
    assert_array_equal(eigenvalue_indices(dec, 1.0), [1, 2])


def laplacian_blocks():
    # hand-sized spectra with known values
    path3 = np.array([[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]])
    return [path3, np.diag([2.0, 2.0, 5.0])]


@pytest.mark.parametrize("a", laplacian_blocks())
def test_known_spectra(a):
    dec = eigh(SymMatrix(a))
    assert_allclose(dec.eigenvalues, np.linalg.eigvalsh(a), atol=1e-13)


def chain_branch(k):
    t = Tree(k + 1, tuple((i, i + 1) for i in range(k)))
    return Branch(t, 0, tuple(range(k + 1)), t.edges)


def test_solve_incidence_is_subtree_sum():
    # along a path, entry e of the solve is the sum of all entries at or
    # beyond the far end of e; integer data stays exact
    branch = chain_branch(5)
    n_r = dirichlet_incidence(branch)
    b = np.array([3.0, -2.0, 7.0, 1.0, 5.0])
    x = solve_incidence(n_r, b)
    assert_array_equal(x, np.array([14.0, 11.0, 13.0, 6.0, 5.0]))


def test_solve_incidence_matches_dense_solve(rng):
    for trial in range(25):
        n = int(rng.integers(2, 12))
        seq = [int(v) for v in rng.integers(0, n, size=max(0, n - 2))]
        from fiedler_inverse import tree_from_pruefer

        t = tree_from_pruefer(n, seq) if n > 2 else Tree(2, ((0, 1),))
        v = int(rng.integers(0, n))
        branch = branches_at(t, v)[0]
        n_r = dirichlet_incidence(branch)
        b = rng.standard_normal(len(branch.interior))
        x = solve_incidence(n_r, b)
        assert_allclose(n_r @ x, b, atol=1e-12)
        assert_allclose(x, np.linalg.solve(n_r, b), atol=1e-12)


def test_solve_incidence_equals_path_matrix_action(rng):
    t = Tree(7, ((0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6)))
    branch = branches_at(t, 2)[0]
    n_r = dirichlet_incidence(branch)
    p = path_matrix(branch)
    b = rng.integers(-5, 6, size=len(branch.interior)).astype(float)
    assert_array_equal(solve_incidence(n_r, b), p @ b)


def test_solve_incidence_rejects_malformed():
    with pytest.raises(InvalidInputError):
        solve_incidence(np.array([[1, 1], [0, 1]], dtype=np.int64), np.ones(2))


def test_entrywise_div_basics():
    out = entrywise_div(np.array([6.0, 0.0]), np.array([3.0, 0.0]), zero_zero_fill=9.0)
    assert_array_equal(out, [2.0, 9.0])
    with pytest.raises(DivisionStructureError) as err:
        entrywise_div(np.array([1.0]), np.array([0.0]), zero_zero_fill=1.0)
    assert err.value.index == 0


@given(
    st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=20),
    st.floats(0.1, 10.0),
)
@settings(max_examples=60, deadline=None)
def test_entrywise_div_property(values, fill):
    x = np.asarray(values)
    y = np.where(x == 0.0, 0.0, 2.0)
    out = entrywise_div(x, y, zero_zero_fill=fill)
    assert_array_equal(out[x == 0.0], np.full(int(np.sum(x == 0.0)), fill))
    assert_allclose(out[x != 0.0], x[x != 0.0] / 2.0, rtol=0, atol=0)
