"""Inverse construction on cycles: weights realizing a periodic balanced vector.

Working frame: rotate the vector so vertex 0 is a peak and x_0 > x_1
(rotation only, never reflection).  With edge j joining j and j+1 and
the incidence orientation -1 at j / +1 at j+1, the edge differences are
d_j = x_{j+1} - x_j and every solution z of N z = x has entries
z_j = h + S_j, where S_j sums x over [j+1, n-1] and h is free.  Weights
exist iff z and d agree in sign entrywise (with exact zeros matching),
and then w_j = lam * z_j / d_j, any 0/0 edge taking an arbitrary
positive weight.

The sign conditions pin h down.  Writing prefix sums P_j = sum over
[0, j] (so z_j = h - P_j up to the zero total), the descending side
needs h < P_j for j in [0, q) and the ascending side needs h > P_j for
j in [q', n-1]; by unimodality the binding constraints sit at the ends:

* two peaks: edge n-1 has d = 0, forcing h = 0;
* two valleys (unique peak): edge q has d = 0, forcing h = -S_q, the
  sum of x over [p', q');
* unique peak and unique valley: any h in the open interval from
  max(0, sum over [p', q']) to min(x_0, sum over [p', q')); the default
  takes the midpoint.

The forced cases use the suffix-sum form directly so the critical entry
of z cancels to an exact 0.0 and the 0/0 rule applies.  For a vector
that is balanced exactly, the resulting window/value always satisfies
every sign condition; a numerically-empty window means the input was
only approximately balanced and raises DegenerateInputError.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classify import classify_cycle_vector
from .errors import (
    DegenerateInputError,
    InvalidParameterError,
    NotRealizableError,
    NumericalAmbiguityError,
    WrongCaseError,
)
from .graphs import Cycle, WeightAssignment
from .linalg import eigenvalue_indices, entrywise_div
from .spectral import laplacian


@dataclass(frozen=True)
class CycleInverseResult:
    """Weights on a cycle realizing (lam, x), with construction bookkeeping.

    rotation s means the internal frame was y_j = x_{(j+s) mod n}; the
    reported weights are already rotated back to the input labeling.
    h_window is populated only in the unique-peak/unique-valley case.
    landed_index tells whether lam sits second or third in the spectrum
    of the constructed Laplacian (2 reported when the two coincide).
    """

    cycle: Cycle
    weights: WeightAssignment
    lam: float
    h: float
    h_window: tuple[float, float] | None
    rotation: int
    filled_edges: tuple[int, ...]
    landed_index: int
    residual: float


def _rotated_frame(x, verdict):
    n = len(x)
    s = verdict.peaks[1]  # p', becomes vertex 0
    y = np.roll(x, -s)
    p_rot = (verdict.peaks[0] - s) % n
    q_rot = (verdict.valleys[0] - s) % n
    qq_rot = (verdict.valleys[1] - s) % n
    return s, y, p_rot, q_rot, qq_rot


def _suffix_sums(y):
    n = len(y)
    s = np.zeros(n)
    for j in range(n - 2, -1, -1):
        s[j] = s[j + 1] + y[j + 1]
    return s


def _window(y, suffix, q_rot):
    lo = max(0.0, float(-suffix[q_rot]))
    hi = min(float(y[0]), float(-suffix[q_rot - 1]))
    return lo, hi


def feasible_h_interval(x) -> tuple[float, float]:
    """Open interval of valid offsets h for an already-rotated vector.

    The vector must be periodic and balanced with vertex 0 a peak and
    x_0 > x_1, and must have a unique peak and a unique valley (in the
    plateau cases h is forced and there is no interval).
    """
    x = np.asarray(x, dtype=float)
    cycle = Cycle(len(x))
    verdict = classify_cycle_vector(cycle, x)
    if not (verdict.periodic and verdict.balanced):
        raise NotRealizableError(verdict)
    if verdict.peaks[1] != 0:
        raise InvalidParameterError(
            f"vector not in the rotated frame: vertex 0 must be a peak "
            f"(peaks are {verdict.peaks})"
        )
    p, pp = verdict.peaks
    q, qq = verdict.valleys
    if p != pp or q != qq:
        raise WrongCaseError(
            f"h is forced when a plateau is present (peaks {verdict.peaks}, "
            f"valleys {verdict.valleys})"
        )
    suffix = _suffix_sums(x)
    lo, hi = _window(x, suffix, q)
    if not lo < hi:
        raise DegenerateInputError(f"numerically empty window ({lo}, {hi})")
    return lo, hi


def cycle_inverse(cycle: Cycle, x, lam: float, zero_fill: float = 1.0, h: float | None = None) -> CycleInverseResult:
    """Weights making x an eigenvector of the cycle Laplacian for lam.

    lam lands as the second- or third-smallest eigenvalue (which one is
    reported, not chosen).  zero_fill is the weight given to 0/0 edges,
    which occur exactly at an extremum plateau.  h overrides the default
    offset; it must equal the forced value in the plateau cases or fall
    inside the feasible window otherwise.
    """
    x = np.asarray(x, dtype=float)
    if not np.isfinite(lam) or lam <= 0.0:
        raise InvalidParameterError(f"eigenvalue must be positive, got {lam!r}")
    if not np.isfinite(zero_fill) or zero_fill <= 0.0:
        raise InvalidParameterError(f"zero_fill must be positive, got {zero_fill!r}")
    verdict = classify_cycle_vector(cycle, x)
    if not (verdict.periodic and verdict.balanced):
        raise NotRealizableError(verdict)
    n = cycle.n
    s, y, p_rot, q_rot, qq_rot = _rotated_frame(x, verdict)
    suffix = _suffix_sums(y)
    two_peaks = p_rot != 0
    two_valleys = q_rot != qq_rot
    window = None
    if two_peaks:
        forced = 0.0
    elif two_valleys:
        forced = -suffix[q_rot]
    else:
        forced = None
        window = _window(y, suffix, q_rot)
        lo, hi = window
        if not lo < hi:
            raise DegenerateInputError(f"numerically empty window ({lo}, {hi})")
    if h is None:
        if forced is not None:
            h_used = forced
        else:
            h_used = (window[0] + window[1]) / 2.0
            if not window[0] < h_used < window[1]:
                raise DegenerateInputError(
                    f"window ({window[0]}, {window[1]}) too narrow for a midpoint"
                )
    else:
        h_used = float(h)
        if forced is not None:
            if h_used != forced:
                raise InvalidParameterError(
                    f"h is forced to {forced!r} by the extremum plateau, got {h_used!r}"
                )
        elif not window[0] < h_used < window[1]:
            raise InvalidParameterError(
                f"h={h_used!r} outside the feasible window ({window[0]}, {window[1]})"
            )
    z = h_used + suffix
    d = np.empty(n)
    d[: n - 1] = y[1:] - y[: n - 1]
    d[n - 1] = y[0] - y[n - 1]
    for j in range(n):
        ok = (z[j] == 0.0) if d[j] == 0.0 else (z[j] > 0.0 if d[j] > 0.0 else z[j] < 0.0)
        if not ok:
            raise DegenerateInputError(
                f"sign mismatch on edge {(j + s) % n}: difference {d[j]!r} "
                f"vs solution entry {z[j]!r}"
            )
    w_rot = entrywise_div(lam * z, d, zero_fill)
    filled = tuple(sorted((j + s) % n for j in range(n) if d[j] == 0.0))
    mapping = {}
    for j in range(n):
        mapping[cycle.edge_pairs[(j + s) % n]] = w_rot[j]
    weights = WeightAssignment(mapping).for_graph(cycle)
    lap = laplacian(cycle, weights)
    residual = float(np.max(np.abs(lap.matrix.a @ x - lam * x)))
    positions = set(int(i) for i in eigenvalue_indices(lap.decomposition, lam))
    if 1 in positions:
        landed = 2
    elif 2 in positions:
        landed = 3
    else:
        raise NumericalAmbiguityError(
            f"constructed eigenvalue {lam} not found at position 2 or 3 "
            f"(spectrum head {lap.decomposition.eigenvalues[:4]})"
        )
    return CycleInverseResult(
        cycle=cycle,
        weights=weights,
        lam=float(lam),
        h=float(h_used),
        h_window=window,
        rotation=s,
        filled_edges=filled,
        landed_index=landed,
        residual=residual,
    )
