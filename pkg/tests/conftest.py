"""Shared fixtures: the two worked weighted trees and the cycle vectors
that the narrative examples use, plus a one-time eigensolver warmup so
the jit compile never lands inside a timed test."""
import numpy as np
import pytest

from fiedler_inverse import Cycle, Tree, WeightAssignment, eigh, laplacian

# 9-vertex Type I tree (0-based here; file labels are 1-based)
T1_EDGES = ((1, 2), (1, 3), (4, 5), (4, 6), (0, 1), (0, 4), (0, 7), (7, 8))
T1_WEIGHTS = {
    (1, 2): 2.0,
    (1, 3): 2.0,
    (4, 5): 3.0,
    (4, 6): 3.0,
    (0, 1): 5.0,
    (0, 4): 4.0,
    (0, 7): 6.0,
    (7, 8): 4.0,
}
T1_VECTOR = np.array([0.0, -1.0, -2.0, -2.0, 1.25, 1.875, 1.875, 0.0, 0.0])

# 6-vertex Type II tree; the bridge weight 20/9 is the series merge 5*4/(5+4)
T2_EDGES = ((0, 1), (0, 2), (0, 3), (3, 4), (3, 5))
T2_WEIGHTS = {
    (0, 1): 2.0,
    (0, 2): 2.0,
    (3, 4): 3.0,
    (3, 5): 3.0,
    (0, 3): 20.0 / 9.0,
}
T2_VECTOR = np.array([-1.0, -2.0, -2.0, 1.25, 1.875, 1.875])

# C10: periodic and balanced; C12: periodic but not balanced
C10_VECTOR = np.array([1.0, 2, 3, 2, 1, 0, -2, -5, -2, 0])
C12_VECTOR = np.array([3.0, 5, 4, 3, 2, 0, -3, -4, -4, -3, -2, -1])


@pytest.fixture(scope="session", autouse=True)
def _warm_solver():
    eigh(np.eye(3))


@pytest.fixture
def tree1():
    return Tree(9, T1_EDGES)


@pytest.fixture
def weights1():
    return WeightAssignment(T1_WEIGHTS)


@pytest.fixture
def lap1(tree1, weights1):
    return laplacian(tree1, weights1)


@pytest.fixture
def tree2():
    return Tree(6, T2_EDGES)


@pytest.fixture
def weights2():
    return WeightAssignment(T2_WEIGHTS)


@pytest.fixture
def lap2(tree2, weights2):
    return laplacian(tree2, weights2)


@pytest.fixture
def rng():
    return np.random.default_rng(20230815)
