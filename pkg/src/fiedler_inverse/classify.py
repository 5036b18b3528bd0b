"""Combinatorial classification of candidate eigenvectors.

Decides whether a vector on a tree has the sign/monotonicity structure
of an algebraic-connectivity eigenvector (a zero characteristic vertex,
or a characteristic edge where the sign flips), whether a vector on a
cycle is periodic and balanced, and whether a vector on a complete graph
is admissible.

Two tolerance regimes share this code.  User-supplied vectors are taken
at face value: an entry is zero iff it is literally 0.0 and plateau
equality means bitwise equality (zero_tol = 0).  Vectors coming out of
the eigensolver carry roundoff, so forward callers pass the solver's
zero threshold; the zero-sum tolerance scales accordingly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .graphs import Cycle, Tree, branches_at

SUM_RTOL = 1e-12


def _as_vector(x, n) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise InvalidInputError(f"expected a vector of length {n}, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("vector has non-finite entries")
    return x


def _sum_tolerance(x, zero_tol, sum_tol):
    if sum_tol is not None:
        return float(sum_tol)
    l1 = float(np.sum(np.abs(x)))
    return (SUM_RTOL if zero_tol == 0.0 else zero_tol) * l1


@dataclass(frozen=True)
class TreeVerdict:
    """Outcome of classifying a vector on a tree.

    kind is "TypeI" (unique zero vertex adjacent to support), "TypeII"
    (unique sign-change edge, no zeros), or "Rejected".  For TypeI,
    branch_signs holds +1/-1/0 per branch at the characteristic vertex
    in branch order; for TypeII, negative_end/positive_end orient the
    characteristic edge.
    """

    kind: str
    char_set: tuple[int, ...] = ()
    branch_signs: tuple[int, ...] = ()
    negative_end: int = -1
    positive_end: int = -1
    reason: str = ""
    witness: tuple = ()

    @property
    def accepted(self) -> bool:
        return self.kind != "Rejected"


def _reject(reason, witness=()):
    return TreeVerdict("Rejected", reason=reason, witness=tuple(witness))


def classify_tree_vector(tree: Tree, x, zero_tol: float = 0.0, sum_tol: float | None = None) -> TreeVerdict:
    """Classify a vector on a tree as TypeI, TypeII, or Rejected."""
    x = _as_vector(x, tree.n)
    total = float(np.sum(x))
    if abs(total) > _sum_tolerance(x, zero_tol, sum_tol):
        return _reject("sum-not-zero", (total,))
    zero = np.abs(x) <= zero_tol
    if np.all(zero):
        return _reject("zero-vector")
    if np.any(zero):
        return _classify_type1(tree, x, zero)
    return _classify_type2(tree, x)


def _classify_type1(tree, x, zero):
    candidates = [
        v for v in range(tree.n)
        if zero[v] and any(not zero[u] for u in tree.neighbors(v))
    ]
    if len(candidates) != 1:
        return _reject("multiple-zero-boundary", tuple(candidates))
    r = candidates[0]
    signs = []
    for branch in branches_at(tree, r):
        has_pos = any(not zero[v] and x[v] > 0 for v in branch.interior)
        has_neg = any(not zero[v] and x[v] < 0 for v in branch.interior)
        has_zero = any(zero[v] for v in branch.interior)
        if has_pos and has_neg:
            return _reject("mixed-sign-branch", (min(branch.interior),))
        if (has_pos or has_neg) and has_zero:
            return _reject("mixed-sign-branch", (min(branch.interior),))
        if not has_pos and not has_neg:
            signs.append(0)
            continue
        sign = 1 if has_pos else -1
        signs.append(sign)
        parent, _ = branch.rooted
        for v in branch.interior:
            w = parent[v]
            if w == r:
                continue
            diff = x[v] - x[w]
            if sign * diff <= 0:
                return _reject("not-monotone", (w, v))
    if 1 not in signs or -1 not in signs:
        return _reject("one-sided-support", tuple(signs))
    return TreeVerdict("TypeI", char_set=(r,), branch_signs=tuple(signs))


def _classify_type2(tree, x):
    flips = [
        (i, j) for i, j in tree.edges
        if (x[i] > 0) != (x[j] > 0)
    ]
    if not flips:
        return _reject("no-sign-change-edge")
    if len(flips) > 1:
        return _reject("multiple-sign-change-edges", tuple(flips))
    i, j = flips[0]
    neg, pos = (i, j) if x[i] < 0 else (j, i)
    for root, other, sign in ((pos, neg, 1), (neg, pos, -1)):
        parent = {root: -1, other: root}  # block the characteristic edge
        stack = [root]
        while stack:
            u = stack.pop()
            for v in tree.neighbors(u):
                if v in parent:
                    continue
                parent[v] = u
                diff = x[v] - x[u]
                if sign * diff <= 0:
                    return _reject("not-monotone", (u, v))
                stack.append(v)
    return TreeVerdict(
        "TypeII",
        char_set=(min(neg, pos), max(neg, pos)),
        negative_end=neg,
        positive_end=pos,
    )


@dataclass(frozen=True)
class CycleVerdict:
    """Outcome of classifying a vector on a cycle.

    peaks = (p, p') and valleys = (q, q') follow the plateau convention:
    p' = p for a unique maximum, otherwise the pair is cyclically
    adjacent with p' one step forward of p.  They are populated whenever
    the vector is periodic.
    """

    periodic: bool
    balanced: bool
    positive: tuple[int, ...] = ()
    negative: tuple[int, ...] = ()
    zero: tuple[int, ...] = ()
    peaks: tuple[int, int] | None = None
    valleys: tuple[int, int] | None = None
    reason: str = ""
    witness: tuple = ()


def _cycle_reject(reason, witness=()):
    return CycleVerdict(False, False, reason=reason, witness=tuple(witness))


def _arc_start(members, n):
    """First vertex of a contiguous cyclic arc, or None if not an arc."""
    starts = [v for v in members if (v - 1) % n not in members]
    if len(starts) != 1:
        return None
    return starts[0]


def _unimodal(vals):
    """Strictly increasing, then one or two equal maxima, then strictly
    decreasing.  Returns (ok, witness_offset)."""
    m = max(vals)
    tops = [i for i, v in enumerate(vals) if v == m]
    if len(tops) > 2 or (len(tops) == 2 and tops[1] != tops[0] + 1):
        return False, tuple(tops)
    a, b = tops[0], tops[-1]
    for i in range(a):
        if not vals[i] < vals[i + 1]:
            return False, (i, i + 1)
    for i in range(b, len(vals) - 1):
        if not vals[i] > vals[i + 1]:
            return False, (i, i + 1)
    return True, ()


def _plateau(x, indices, n):
    """Order an extremum plateau of one or two vertices as (e, e')."""
    if len(indices) == 1:
        return indices[0], indices[0]
    a, b = sorted(indices)
    if b == a + 1:
        return a, b
    if a == 0 and b == n - 1:
        # wrapped pair: n-1 comes first in cycle order
        return b, a
    raise InvalidInputError(f"extremum plateau {indices} is not cyclically adjacent")


def cyclic_interval(a, b, n, include_a, include_b):
    """Indices walking forward from a to b on Z_n."""
    out = []
    if include_a:
        out.append(a % n)
    t = (a + 1) % n
    while t != b % n:
        out.append(t)
        t = (t + 1) % n
    if include_b:
        out.append(b % n)
    return out


def classify_cycle_vector(cycle: Cycle, x, zero_tol: float = 0.0, sum_tol: float | None = None) -> CycleVerdict:
    """Classify a vector on a cycle: periodic structure, then balance."""
    n = cycle.n
    x = _as_vector(x, n)
    tol = _sum_tolerance(x, zero_tol, sum_tol)
    total = float(np.sum(x))
    if abs(total) > tol:
        return _cycle_reject("sum-not-zero", (total,))
    pos = {v for v in range(n) if x[v] > zero_tol}
    neg = {v for v in range(n) if x[v] < -zero_tol}
    zero = set(range(n)) - pos - neg
    if not pos:
        return _cycle_reject("no-positive-part")
    if not neg:
        return _cycle_reject("no-negative-part")
    if len(zero) > 2:
        return _cycle_reject("too-many-zeros", tuple(sorted(zero)))
    for v in zero:
        if (v + 1) % n in zero:
            return _cycle_reject("adjacent-zeros", (v, (v + 1) % n))
    parts = {"positive": tuple(sorted(pos)), "negative": tuple(sorted(neg)), "zero": tuple(sorted(zero))}
    for name, members in (("positive", pos), ("negative", neg)):
        start = _arc_start(members, n)
        if start is None:
            return _cycle_reject(f"{name}-part-not-a-path", parts[name])
        vals = [x[(start + t) % n] for t in range(len(members))]
        if name == "negative":
            vals = [-v for v in vals]
        ok, witness = _unimodal(vals)
        if not ok:
            return _cycle_reject(
                f"{name}-part-not-unimodal",
                tuple((start + t) % n for t in witness),
            )
    hi, lo = float(np.max(x)), float(np.min(x))
    peak_set = [v for v in range(n) if x[v] == hi]
    valley_set = [v for v in range(n) if x[v] == lo]
    p, pp = _plateau(x, peak_set, n)
    q, qq = _plateau(x, valley_set, n)
    s1 = float(sum(x[v] for v in cyclic_interval(p, q, n, False, True)))
    s2 = float(sum(x[v] for v in cyclic_interval(pp, qq, n, True, False)))
    two_p = p != pp
    two_v = q != qq
    if two_p and two_v:
        balanced = abs(s1) <= tol and abs(s2) <= tol
    else:
        balanced = s1 < 0.0 < s2
    return CycleVerdict(
        True,
        balanced,
        positive=parts["positive"],
        negative=parts["negative"],
        zero=parts["zero"],
        peaks=(p, pp),
        valleys=(q, qq),
        reason="" if balanced else "not-balanced",
        witness=() if balanced else (s1, s2),
    )


@dataclass(frozen=True)
class CompleteVerdict:
    admissible: bool
    reason: str = ""


def classify_complete_vector(n: int, x, sum_tol: float | None = None) -> CompleteVerdict:
    """On a complete graph, any nonzero zero-sum vector works."""
    if n < 2:
        raise InvalidInputError(f"complete graph needs n >= 2, got {n}")
    x = _as_vector(x, n)
    total = float(np.sum(x))
    if abs(total) > _sum_tolerance(x, 0.0, sum_tol):
        return CompleteVerdict(False, "sum-not-zero")
    if not np.any(x != 0.0):
        return CompleteVerdict(False, "zero-vector")
    return CompleteVerdict(True)
