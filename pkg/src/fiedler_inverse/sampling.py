"""Random instances for tests and the data-generation CLI.

All samplers take a numpy Generator; nothing here touches global RNG
state.  Vectors come out in the exact regime the inverse constructions
expect: structural zeros are literal 0.0 and the zero-sum balancing is
done by scaling one side, which preserves strict monotonicity, so every
draw is valid by construction (the cycle sampler is the one exception
and rejects until the interval sums balance).
"""
from __future__ import annotations

import heapq

import numpy as np

from .classify import classify_cycle_vector
from .errors import InvalidParameterError
from .graphs import Cycle, Tree, WeightAssignment, branches_at


def random_tree(n: int, rng: np.random.Generator) -> Tree:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n == 1:
        return Tree(1, ())
    if n == 2:
        return Tree(2, ((0, 1),))
    seq = [int(v) for v in rng.integers(0, n, size=n - 2)]
    return tree_from_pruefer(n, seq)


def tree_from_pruefer(n: int, seq: list[int]) -> Tree:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, tuple(edges))


def random_weights(graph, rng: np.random.Generator, low: float = 0.5, high: float = 2.0) -> WeightAssignment:
    values = rng.uniform(low, high, size=len(graph.edges))
    return WeightAssignment.from_values(graph.edges, values)


def _grow_side(tree, root, blocked, rng):
    """Strictly increasing positive values away from root, skipping blocked."""
    values = {}
    stack = [(root, 0.0)]
    seen = {root, blocked} if blocked is not None else {root}
    while stack:
        u, base = stack.pop()
        for v in tree.neighbors(u):
            if v in seen:
                continue
            seen.add(v)
            values[v] = base + rng.uniform(0.2, 1.0)
            stack.append((v, values[v]))
    return values


def random_type1_vector(tree: Tree, rng: np.random.Generator, char_vertex: int | None = None) -> np.ndarray:
    """A vector with characteristic vertex structure on the given tree.

    The characteristic vertex needs degree >= 2 (one positive and one
    negative branch); with more branches the extras get random signs,
    including zero.
    """
    candidates = [v for v in range(tree.n) if tree.degree(v) >= 2]
    if not candidates:
        raise InvalidParameterError(f"tree on {tree.n} vertices has no internal vertex")
    r = int(rng.choice(candidates)) if char_vertex is None else char_vertex
    branches = branches_at(tree, r)
    signs = [1, -1] + [int(s) for s in rng.choice([1, -1, 0], size=len(branches) - 2)]
    rng.shuffle(signs)
    x = np.zeros(tree.n)
    for branch, sign in zip(branches, signs):
        if sign == 0:
            continue
        start = next(u for u in tree.neighbors(r) if u in branch.interior)
        x[start] = rng.uniform(0.2, 1.0)
        grown = _grow_side(tree, start, r, rng)
        for v, val in grown.items():
            x[v] = val + x[start]
        if sign == -1:
            for v in branch.interior:
                x[v] = -x[v]
    return _balance_positive_side(x)


def random_type2_vector(tree: Tree, rng: np.random.Generator, edge: tuple[int, int] | None = None) -> np.ndarray:
    """A vector with characteristic edge structure on the given tree."""
    if edge is None:
        p, q = tree.edges[rng.integers(0, len(tree.edges))]
    else:
        p, q = edge
    x = np.zeros(tree.n)
    x[q] = rng.uniform(0.2, 1.0)
    for v, val in _grow_side(tree, q, p, rng).items():
        x[v] = val + x[q]
    x[p] = -rng.uniform(0.2, 1.0)
    for v, val in _grow_side(tree, p, q, rng).items():
        x[v] = -(val - x[p])
    return _balance_positive_side(x)


def _balance_positive_side(x: np.ndarray) -> np.ndarray:
    pos_mass = float(np.sum(x[x > 0]))
    neg_mass = float(-np.sum(x[x < 0]))
    x = x.copy()
    x[x > 0] *= neg_mass / pos_mass
    return x


def random_fiedler_like(tree: Tree, rng: np.random.Generator) -> np.ndarray:
    """Either characteristic-set structure, as the tree allows."""
    can_type1 = any(tree.degree(v) >= 2 for v in range(tree.n))
    if can_type1 and rng.random() < 0.5:
        return random_type1_vector(tree, rng)
    return random_type2_vector(tree, rng)


def _unimodal_arc(values: np.ndarray, rng: np.random.Generator) -> list[float]:
    """Arrange positive values into a strictly unimodal profile."""
    values = np.sort(values)
    k = len(values)
    peak_pos = int(rng.integers(0, k))
    left, right = [], []
    # deal from the top: largest at the peak, the rest split around it
    for i, v in enumerate(values[::-1]):
        if i == 0:
            continue
        if len(left) < peak_pos and (len(right) >= k - 1 - peak_pos or rng.random() < 0.5):
            left.append(v)
        else:
            right.append(v)
    return [*reversed(left), values[-1], *right]


def random_periodic_balanced(
    n: int,
    rng: np.random.Generator,
    zeros: int | None = None,
    max_tries: int = 2000,
) -> np.ndarray:
    """A periodic and balanced vector on C_n with the given zero count.

    Draws unimodal arcs and rejects until the two interval sums land on
    opposite sides of zero; acceptance is high because the peak and
    valley dominate their arcs by construction.
    """
    if zeros is None:
        zeros = int(rng.integers(0, 3)) if n >= 4 else int(rng.integers(0, 2))
    if zeros not in (0, 1, 2):
        raise InvalidParameterError(f"zero count must be 0, 1, or 2, got {zeros}")
    if n - zeros < 2:
        raise InvalidParameterError(f"cycle on {n} vertices cannot carry {zeros} zeros")
    cycle = Cycle(n)
    for _ in range(max_tries):
        m = n - zeros
        n_pos = int(rng.integers(1, m))
        n_neg = m - n_pos
        pos_vals = rng.uniform(0.2, 1.0, size=n_pos)
        pos_vals[rng.integers(0, n_pos)] = pos_vals.max() + rng.uniform(0.5, 2.0)
        neg_vals = rng.uniform(0.2, 1.0, size=n_neg)
        neg_vals[rng.integers(0, n_neg)] = neg_vals.max() + rng.uniform(0.5, 2.0)
        pos_arc = _unimodal_arc(pos_vals, rng)
        neg_arc = [-v for v in _unimodal_arc(neg_vals, rng)]
        layout = list(pos_arc)
        if zeros >= 1:
            layout.append(0.0)
        layout.extend(neg_arc)
        if zeros == 2:
            layout.append(0.0)
        x = np.array(layout)
        if zeros == 1 and rng.random() < 0.5:
            # put the single zero on the other junction
            x = np.roll(x, 1)
        x = _balance_positive_side(x)
        shift = int(rng.integers(0, n))
        x = np.roll(x, shift)
        verdict = classify_cycle_vector(cycle, x)
        if verdict.periodic and verdict.balanced:
            return x
    raise RuntimeError(f"no balanced draw in {max_tries} tries (n={n}, zeros={zeros})")
