"""Inverse construction: from a classified tree vector to edge weights.

Everything is normalized so the target eigenvalue is 1; rescale at the
end for any other positive value.  The core step recovers the unique
weight assignment for which a prescribed strictly increasing vector is
the smallest-eigenvalue eigenvector of a branch's Dirichlet matrix:
each edge weight is the eigenvalue times the subtree sum of the vector
divided by the difference across the edge.

A Type I vector is handled branch by branch at its characteristic
vertex.  Signed branches are forced; each zero branch is a free choice
of a Perron value mu >= 1 and a strictly increasing filler profile, and
the number of branches sitting exactly at 1 determines the multiplicity
of the eigenvalue 1 in the assembled Laplacian (count minus one).

A Type II vector is handled by solving the two branches that overlap on
the characteristic edge and merging the two weights of that edge in
series: w = w1 w2 / (w1 + w2).
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .classify import TreeVerdict, classify_tree_vector
from .errors import (
    InvalidInputError,
    InvalidParameterError,
    NotFiedlerLikeError,
    NotIncreasingError,
)
from .graphs import Branch, Tree, WeightAssignment, branches_at, dirichlet_incidence
from .linalg import solve_incidence


@dataclass(frozen=True)
class DirichletReconstruction:
    """Weights making (value, vector) the smallest Dirichlet eigenpair."""

    branch: Branch
    value: float
    vector: np.ndarray
    weights: WeightAssignment


def dirichlet_from_perron(branch: Branch, lam: float, x) -> DirichletReconstruction:
    """Recover branch weights from a prescribed smallest eigenpair.

    ``x`` lives on the interior vertices of the branch (ascending vertex
    order) and must be strictly increasing along every path away from
    the boundary; ``lam`` is the target smallest eigenvalue (> 0).
    """
    if not np.isfinite(lam) or lam <= 0.0:
        raise InvalidParameterError(f"eigenvalue must be positive, got {lam!r}")
    x = np.asarray(x, dtype=float)
    interior = branch.interior
    if x.shape != (len(interior),):
        raise InvalidParameterError(
            f"vector length {x.shape} does not match {len(interior)} interior vertices"
        )
    if not np.all(np.isfinite(x)):
        raise InvalidParameterError("vector has non-finite entries")
    n_r = dirichlet_incidence(branch)
    diffs = n_r.T @ x
    for k, d in enumerate(diffs):
        if not d > 0.0:
            raise NotIncreasingError(branch.edges[k])
    sums = solve_incidence(n_r, x)
    values = lam * sums / diffs
    weights = WeightAssignment.from_values(branch.edges, values)
    return DirichletReconstruction(branch, float(lam), x, weights)


@dataclass(frozen=True)
class FreeBranchChoice:
    """Parameters actually used for one zero branch of a Type I vector."""

    index: int
    mu: float
    filler: tuple[float, ...]


@dataclass(frozen=True)
class TreeInverseResult:
    """Weights realizing a tree vector at ``achieved_lambda``.

    predicted_multiplicity is the multiplicity the achieved eigenvalue
    must have in the assembled Laplacian; free_branches records the
    (mu, filler) choice made for each zero branch; side_weights, for
    Type II only, holds the two pre-merge weights of the characteristic
    edge.
    """

    tree: Tree
    weights: WeightAssignment
    achieved_lambda: float
    kind: str
    char_set: tuple[int, ...]
    predicted_multiplicity: int
    branch_signs: tuple[int, ...] = ()
    free_branches: tuple[FreeBranchChoice, ...] = ()
    side_weights: tuple[float, float] | None = None


def default_filler(branch: Branch) -> np.ndarray:
    """Graph distance from the boundary, on the interior vertices."""
    parent, _ = branch.rooted
    depth = {branch.boundary: 0}
    # rooted BFS order guarantees parents come first
    for v in branch.rooted[1]:
        if v != branch.boundary:
            depth[v] = depth[parent[v]] + 1
    return np.array([depth[v] for v in branch.interior], dtype=float)


def type1_inverse(tree: Tree, x, mu=None, filler=None) -> TreeInverseResult:
    """Realize a Type I vector at eigenvalue 1.

    ``mu`` maps zero-branch indices (position in the branch order at the
    characteristic vertex) to Perron values >= 1; ``filler`` maps the
    same indices to strictly increasing interior profiles.  Defaults:
    mu = 1 and the graph-distance filler.
    """
    verdict = classify_tree_vector(tree, x)
    if verdict.kind != "TypeI":
        raise NotFiedlerLikeError(verdict, expected="TypeI")
    x = np.asarray(x, dtype=float)
    r = verdict.char_set[0]
    branches = branches_at(tree, r)
    mu = dict(mu or {})
    filler = dict(filler or {})
    zero_indices = {i for i, s in enumerate(verdict.branch_signs) if s == 0}
    for name, mapping in (("mu", mu), ("filler", filler)):
        for key in mapping:
            if key not in zero_indices:
                raise InvalidParameterError(
                    f"{name} given for branch {key}, but only zero branches "
                    f"{sorted(zero_indices)} accept free parameters"
                )
    combined = {}
    free = []
    at_one = 0
    for i, (branch, sign) in enumerate(zip(branches, verdict.branch_signs)):
        sub = x[list(branch.interior)]
        if sign == 1:
            recon = dirichlet_from_perron(branch, 1.0, sub)
            at_one += 1
        elif sign == -1:
            recon = dirichlet_from_perron(branch, 1.0, -sub)
            at_one += 1
        else:
            value = float(mu.get(i, 1.0))
            if not np.isfinite(value) or value < 1.0:
                raise InvalidParameterError(
                    f"branch {i}: Perron value must be >= 1, got {value!r}"
                )
            profile = np.asarray(filler.get(i, default_filler(branch)), dtype=float)
            if profile.shape != (len(branch.interior),):
                raise InvalidParameterError(
                    f"branch {i}: filler needs {len(branch.interior)} values, "
                    f"got {profile.size}"
                )
            try:
                recon = dirichlet_from_perron(branch, value, profile)
            except (NotIncreasingError, InvalidInputError) as exc:
                raise InvalidParameterError(f"branch {i}: bad filler: {exc}") from None
            free.append(FreeBranchChoice(i, value, tuple(float(v) for v in profile)))
            if value == 1.0:
                at_one += 1
        combined.update(recon.weights.weights)
    return TreeInverseResult(
        tree=tree,
        weights=WeightAssignment(combined).for_graph(tree),
        achieved_lambda=1.0,
        kind="TypeI",
        char_set=verdict.char_set,
        predicted_multiplicity=at_one - 1,
        branch_signs=verdict.branch_signs,
        free_branches=tuple(free),
    )


def type2_inverse(tree: Tree, x) -> TreeInverseResult:
    """Realize a Type II vector at eigenvalue 1."""
    verdict = classify_tree_vector(tree, x)
    if verdict.kind != "TypeII":
        raise NotFiedlerLikeError(verdict, expected="TypeII")
    x = np.asarray(x, dtype=float)
    neg, pos = verdict.negative_end, verdict.positive_end
    side_neg = _branch_containing(branches_at(tree, pos), neg)
    side_pos = _branch_containing(branches_at(tree, neg), pos)
    recon_neg = dirichlet_from_perron(side_neg, 1.0, -x[list(side_neg.interior)])
    recon_pos = dirichlet_from_perron(side_pos, 1.0, x[list(side_pos.interior)])
    shared = (min(neg, pos), max(neg, pos))
    w1 = recon_neg.weights[shared]
    w2 = recon_pos.weights[shared]
    combined = {}
    combined.update(recon_neg.weights.weights)
    combined.update(recon_pos.weights.weights)
    combined[shared] = w1 * w2 / (w1 + w2)
    return TreeInverseResult(
        tree=tree,
        weights=WeightAssignment(combined).for_graph(tree),
        achieved_lambda=1.0,
        kind="TypeII",
        char_set=verdict.char_set,
        predicted_multiplicity=1,
        side_weights=(w1, w2),
    )


def _branch_containing(branches, v):
    for b in branches:
        if v in b.interior:
            return b
    raise InvalidParameterError(f"no branch contains vertex {v}")  # pragma: no cover


def general_lambda_rescale(result: TreeInverseResult, lam: float) -> TreeInverseResult:
    """Scale all weights so the achieved eigenvalue becomes ``lam``."""
    if not np.isfinite(lam) or lam <= 0.0:
        raise InvalidParameterError(f"eigenvalue must be positive, got {lam!r}")
    scale = lam / result.achieved_lambda
    weights = WeightAssignment({e: w * scale for e, w in result.weights.weights.items()})
    side = result.side_weights
    if side is not None:
        side = (side[0] * scale, side[1] * scale)
    return replace(
        result,
        weights=weights,
        achieved_lambda=float(lam),
        side_weights=side,
    )
