"""Command-line interface.

Subcommands: ``classify``, ``inverse``, ``forward``, ``transform``, and
``gen`` (test-data generation, seeded by the FIEDLER_SEED environment
variable).  All input and output is JSON; vertex labels in files are
1-based.  Output is byte-deterministic for identical inputs and flags.

Exit codes: 0 success, 1 verification failure, 2 input or parameter
error, 3 mathematical inadmissibility.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import docio
from .classify import (
    CycleVerdict,
    TreeVerdict,
    classify_complete_vector,
    classify_cycle_vector,
    classify_tree_vector,
)
from .cycle_inverse import cycle_inverse
from .docio import GraphDocument, dumps, weight_key, weights_to_dict
from .errors import (
    BoundaryNotLeafError,
    DegenerateInputError,
    DegeneratePerronError,
    DivisionStructureError,
    InvalidGraphError,
    InvalidInputError,
    InvalidParameterError,
    InvalidWeightError,
    NotFiedlerLikeError,
    NotIncreasingError,
    NotInDomainError,
    NotRealizableError,
    NumericalAmbiguityError,
    WrongCaseError,
)
from .graphs import Cycle, Tree, WeightAssignment
from .linalg import eigenvalue_indices, multiplicity_of
from .sampling import (
    random_periodic_balanced,
    random_tree,
    random_type1_vector,
    random_type2_vector,
    random_weights,
)
from .spectral import fiedler, laplacian, locate_characteristic_set, zero_tolerance
from .transform import WeightedTree, contract, subdivide
from .tree_inverse import general_lambda_rescale, type1_inverse, type2_inverse

_INPUT_ERRORS = (
    InvalidInputError,
    InvalidGraphError,
    InvalidWeightError,
    InvalidParameterError,
    BoundaryNotLeafError,
)
_INADMISSIBLE_ERRORS = (
    NotFiedlerLikeError,
    NotRealizableError,
    NotInDomainError,
    DegenerateInputError,
    NumericalAmbiguityError,
    DegeneratePerronError,
    DivisionStructureError,
    NotIncreasingError,
    WrongCaseError,
)

# Witnesses under these reasons hold vertex indices and get shifted to
# 1-based on output; everything else is passed through as numbers.
_VERTEX_WITNESS_REASONS = {
    "multiple-zero-boundary",
    "mixed-sign-branch",
    "not-monotone",
    "multiple-sign-change-edges",
    "too-many-zeros",
    "adjacent-zeros",
    "positive-part-not-a-path",
    "negative-part-not-a-path",
    "positive-part-not-unimodal",
    "negative-part-not-unimodal",
}


def _print(payload) -> None:
    sys.stdout.write(dumps(payload) + "\n")


def _fail(message: str) -> None:
    sys.stderr.write(f"error: {message}\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: line {exc.lineno}: {exc.msg}") from None


def _load_graph_document(path: str) -> GraphDocument:
    data = _load_json(path)
    try:
        return docio.parse_graph_document(data)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from None


def _load_vector(path: str, n: int) -> np.ndarray:
    data = _load_json(path)
    try:
        return docio.parse_vector(data, n)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from None


def _witness_payload(reason: str, witness: tuple) -> list:
    def shift(item):
        if isinstance(item, tuple):
            return [shift(v) for v in item]
        return int(item) + 1

    if reason in _VERTEX_WITNESS_REASONS:
        return [shift(v) for v in witness]
    out = []
    for v in witness:
        if isinstance(v, (np.floating, float)):
            out.append(float(v))
        else:
            out.append(int(v))
    return out


def _tree_verdict_payload(verdict: TreeVerdict) -> dict:
    payload: dict = {"kind": verdict.kind}
    if verdict.accepted:
        payload["char_set"] = [v + 1 for v in verdict.char_set]
        if verdict.kind == "TypeI":
            payload["branch_signs"] = list(verdict.branch_signs)
        else:
            payload["negative_end"] = verdict.negative_end + 1
            payload["positive_end"] = verdict.positive_end + 1
    else:
        payload["reason"] = verdict.reason
        payload["witness"] = _witness_payload(verdict.reason, verdict.witness)
    return payload


def _cycle_verdict_payload(verdict: CycleVerdict) -> dict:
    payload: dict = {"periodic": verdict.periodic, "balanced": verdict.balanced}
    if verdict.periodic:
        payload["positive_part"] = [v + 1 for v in verdict.positive]
        payload["negative_part"] = [v + 1 for v in verdict.negative]
        payload["zeros"] = [v + 1 for v in verdict.zero]
        payload["peaks"] = [v + 1 for v in verdict.peaks]
        payload["valleys"] = [v + 1 for v in verdict.valleys]
    if verdict.reason:
        payload["reason"] = verdict.reason
        payload["witness"] = _witness_payload(verdict.reason, verdict.witness)
    return payload


def cmd_classify(args) -> int:
    doc = _load_graph_document(args.graph)
    x = _load_vector(args.vector, doc.n)
    if doc.kind == "tree":
        verdict = classify_tree_vector(doc.graph(), x)
        _print(_tree_verdict_payload(verdict))
        return 0 if verdict.accepted else 3
    if doc.kind == "cycle":
        verdict = classify_cycle_vector(doc.graph(), x)
        _print(_cycle_verdict_payload(verdict))
        return 0 if verdict.periodic and verdict.balanced else 3
    verdict = classify_complete_vector(doc.n, x)
    payload: dict = {"admissible": verdict.admissible}
    if not verdict.admissible:
        payload["reason"] = verdict.reason
    _print(payload)
    return 0 if verdict.admissible else 3


def _parse_indexed(items: list[str], flag: str) -> dict[int, str]:
    """Split repeated BRANCH=VALUE flags into a 0-based dict of raw values."""
    out: dict[int, str] = {}
    for item in items:
        key, sep, value = item.partition("=")
        try:
            idx = int(key) if sep else None
        except ValueError:
            idx = None
        if idx is None or idx < 1:
            raise InvalidInputError(
                f"--{flag} expects BRANCH=VALUE with a 1-based branch index, got {item!r}"
            )
        if idx - 1 in out:
            raise InvalidInputError(f"--{flag} names branch {idx} twice")
        out[idx - 1] = value
    return out


def _parse_filler_spec(spec: str) -> tuple[float, ...]:
    """A filler is an inline JSON array (parens allowed) or a file of one."""
    text = spec.strip()
    if text.startswith("(") and text.endswith(")"):
        text = "[" + text[1:-1] + "]"
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"bad inline filler {spec!r}: {exc.msg}") from None
    else:
        data = _load_json(spec)
    if not isinstance(data, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in data
    ):
        raise InvalidInputError(f"filler {spec!r} must be an array of numbers")
    return tuple(float(v) for v in data)


def _check(name: str, value, tolerance, ok: bool) -> dict:
    entry: dict = {"name": name, "value": value}
    if tolerance is not None:
        entry["tolerance"] = tolerance
    entry["pass"] = bool(ok)
    return entry


def _tree_report(tree: Tree, x: np.ndarray, lam: float, result, verdict) -> dict:
    """Recompute every claim about the reconstructed weights from scratch."""
    lap = laplacian(tree, result.weights)
    dec = lap.decomposition
    lambda2 = float(dec.eigenvalues[1])
    residual = float(np.max(np.abs(lap.matrix.a @ x - lam * x)))
    mult = multiplicity_of(dec, lambda2)
    located = locate_characteristic_set(lap)

    lam_tol = 1e-8 * max(1.0, abs(lam))
    res_tol = 1e-8 * max(1.0, abs(lam)) * max(1.0, float(np.max(np.abs(x))))
    char_in = tuple(verdict.char_set)
    checks = [
        _check("lambda-matches", abs(lambda2 - lam), lam_tol, abs(lambda2 - lam) <= lam_tol),
        _check("eigen-residual", residual, res_tol, residual <= res_tol),
        _check(
            "characteristic-set-preserved",
            [v + 1 for v in located.vertices],
            None,
            located.vertices == char_in and located.kind == verdict.kind,
        ),
        _check(
            "multiplicity-as-predicted",
            mult,
            None,
            mult == result.predicted_multiplicity,
        ),
    ]
    return {
        "input": {
            "kind": "tree",
            "n": tree.n,
            "lambda": lam,
            "vector": docio.vector_to_list(x),
            "verdict": _tree_verdict_payload(verdict),
        },
        "achieved_lambda": lambda2,
        "residual": residual,
        "multiplicity": mult,
        "char_set": [v + 1 for v in located.vertices],
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }


def _cycle_report(cycle: Cycle, x: np.ndarray, lam: float, result, verdict) -> dict:
    lap = laplacian(cycle, result.weights)
    dec = lap.decomposition
    residual = float(np.max(np.abs(lap.matrix.a @ x - lam * x)))
    positions = [int(k) for k in eigenvalue_indices(dec, lam)]
    mult = len(positions)
    landed_ok = bool(set(positions) & {1, 2})

    res_tol = 1e-9 * max(1.0, abs(lam)) * max(1.0, float(np.max(np.abs(x))))
    checks = [
        _check("eigen-residual", residual, res_tol, residual <= res_tol),
        _check(
            "lands-second-or-third",
            [p + 1 for p in positions],
            None,
            landed_ok,
        ),
    ]
    payload = {
        "input": {
            "kind": "cycle",
            "n": cycle.n,
            "lambda": lam,
            "vector": docio.vector_to_list(x),
            "verdict": _cycle_verdict_payload(verdict),
        },
        "achieved_lambda": lam,
        "residual": residual,
        "multiplicity": mult,
        "landed_index": result.landed_index,
        "h": result.h,
        "h_window": list(result.h_window) if result.h_window is not None else None,
        "rotation": result.rotation,
        "filled_edges": [weight_key(cycle.edge_pairs[p]) for p in result.filled_edges],
        "checks": checks,
    }
    payload["pass"] = all(c["pass"] for c in checks)
    return payload


def cmd_inverse(args) -> int:
    doc = _load_graph_document(args.graph)
    x = _load_vector(args.vector, doc.n)
    lam = args.lam
    if not (np.isfinite(lam) and lam > 0):
        raise InvalidParameterError(f"--lambda must be positive and finite, got {lam}")

    if doc.kind == "complete":
        raise InvalidInputError(
            "inverse construction is defined for trees and cycles"
        )

    if doc.kind == "tree":
        tree = doc.graph()
        verdict = classify_tree_vector(tree, x)
        if not verdict.accepted:
            _print(_tree_verdict_payload(verdict))
            _fail(f"vector rejected: {verdict.reason}")
            return 3
        mu_raw = _parse_indexed(args.mu, "mu")
        filler_raw = _parse_indexed(args.filler, "filler")
        if verdict.kind == "TypeII" and (mu_raw or filler_raw):
            raise InvalidParameterError("--mu and --filler apply to Type I inverses")
        if verdict.kind == "TypeI":
            mu = {}
            for idx, raw in mu_raw.items():
                try:
                    mu[idx] = float(raw)
                except ValueError:
                    raise InvalidInputError(f"--mu value {raw!r} is not a number") from None
            filler = {idx: _parse_filler_spec(raw) for idx, raw in filler_raw.items()}
            result = type1_inverse(tree, x, mu=mu or None, filler=filler or None)
        else:
            result = type2_inverse(tree, x)
        if lam != 1.0:
            result = general_lambda_rescale(result, lam)
        _print(weights_to_dict(result.weights, tree.edges))
        if args.verify:
            report = _tree_report(tree, x, lam, result, verdict)
            _print(report)
            return 0 if report["pass"] else 1
        return 0

    cycle = doc.graph()
    try:
        result = cycle_inverse(cycle, x, lam, zero_fill=args.zero_fill, h=args.h_value)
    except NotRealizableError as exc:
        _print(_cycle_verdict_payload(exc.verdict))
        _fail(f"vector rejected: {exc.verdict.reason}")
        return 3
    _print(weights_to_dict(result.weights, cycle.edge_pairs))
    if args.verify:
        verdict = classify_cycle_vector(cycle, x)
        report = _cycle_report(cycle, x, lam, result, verdict)
        _print(report)
        return 0 if report["pass"] else 1
    return 0


def cmd_forward(args) -> int:
    doc = _load_graph_document(args.graph)
    if doc.kind == "complete":
        raise InvalidInputError("forward analysis is defined for trees and cycles")
    if doc.weights is None:
        raise InvalidInputError(f"{args.graph}: forward analysis needs weights")
    graph = doc.graph()
    lap = laplacian(graph, doc.weights)
    data = fiedler(lap)
    payload: dict = {
        "lambda2": float(data.lambda2),
        "multiplicity": data.multiplicity,
        "fiedler": [docio.vector_to_list(data.basis[:, k]) for k in range(data.basis.shape[1])],
    }
    if doc.kind == "tree":
        located = locate_characteristic_set(lap)
        payload["kind"] = located.kind
        payload["char_set"] = [v + 1 for v in located.vertices]
    else:
        verdicts = []
        dec = lap.decomposition
        for position in (1, 2):
            column = dec.eigenvectors[:, position]
            verdict = classify_cycle_vector(graph, column, zero_tol=zero_tolerance(column))
            entry = {
                "position": position + 1,
                "eigenvalue": float(dec.eigenvalues[position]),
            }
            entry.update(_cycle_verdict_payload(verdict))
            verdicts.append(entry)
        payload["verdicts"] = verdicts
    _print(payload)
    return 0


def cmd_transform(args) -> int:
    doc = _load_graph_document(args.graph)
    if doc.kind != "tree":
        raise InvalidInputError("transforms are defined for weighted trees")
    if doc.weights is None:
        raise InvalidInputError(f"{args.graph}: transforms need weights")
    wt = WeightedTree(doc.graph(), doc.weights)
    if args.contract:
        res = contract(wt)
        out = res.weighted_tree
        sys.stderr.write(
            f"removed vertex {res.removed_vertex + 1}; higher labels shift down by one\n"
        )
    else:
        res = subdivide(wt)
        out = res.weighted_tree
        i, j = res.split_edge
        sys.stderr.write(
            f"inserted vertex {res.new_vertex + 1} on edge {i + 1}-{j + 1}\n"
        )
    out_doc = GraphDocument(
        kind="tree", n=out.tree.n, edges=out.tree.edges, weights=out.weights
    )
    _print(docio.document_to_dict(out_doc))
    return 0


def _gen_rng() -> np.random.Generator:
    seed = os.environ.get("FIEDLER_SEED")
    if seed is not None:
        try:
            return np.random.default_rng(int(seed))
        except ValueError:
            raise InvalidInputError(f"FIEDLER_SEED must be an integer, got {seed!r}") from None
    return np.random.default_rng()


def _require_positive(n: int, what: str, minimum: int) -> None:
    if n < minimum:
        raise InvalidInputError(f"{what} needs n >= {minimum}, got {n}")


def cmd_gen(args) -> int:
    rng = _gen_rng()
    if args.what == "tree":
        _require_positive(args.n, "a tree", 1)
        tree = random_tree(args.n, rng)
        weights = random_weights(tree, rng) if args.weights else None
        doc = GraphDocument(kind="tree", n=tree.n, edges=tree.edges, weights=weights)
        _print(docio.document_to_dict(doc))
        return 0
    if args.what == "cycle":
        _require_positive(args.n, "a cycle", 3)
        cycle = Cycle(args.n)
        weights = random_weights(cycle, rng) if args.weights else None
        doc = GraphDocument(kind="cycle", n=cycle.n, weights=weights)
        _print(docio.document_to_dict(doc))
        return 0
    if args.what == "vector":
        doc = _load_graph_document(args.graph)
        if doc.kind != "tree":
            raise InvalidInputError("gen vector wants a tree file; use gen cycle-vector for cycles")
        tree = doc.graph()
        if args.kind == "type2":
            x = random_type2_vector(tree, rng)
        elif args.kind == "type1":
            x = random_type1_vector(tree, rng)
        else:
            x = (
                random_type1_vector(tree, rng)
                if any(tree.degree(v) >= 2 for v in range(tree.n)) and rng.random() < 0.5
                else random_type2_vector(tree, rng)
            )
        _print(docio.vector_to_list(x))
        return 0
    _require_positive(args.n, "a cycle vector", 3)
    x = random_periodic_balanced(args.n, rng, zeros=args.zeros)
    _print(docio.vector_to_list(x))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiedler-inverse",
        description="Forward and inverse eigenvector problems on weighted trees and cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a vector against a graph")
    c.add_argument("graph", help="graph JSON file")
    c.add_argument("vector", help="vector JSON file")
    c.set_defaults(func=cmd_classify)

    i = sub.add_parser("inverse", help="construct weights realizing a vector")
    i.add_argument("graph")
    i.add_argument("vector")
    i.add_argument("--lambda", dest="lam", type=float, default=1.0, metavar="L",
                   help="target eigenvalue (default 1)")
    i.add_argument("--mu", action="append", default=[], metavar="BRANCH=VALUE",
                   help="Perron value >= 1 for a zero branch (repeatable, 1-based)")
    i.add_argument("--filler", action="append", default=[], metavar="BRANCH=SPEC",
                   help="positive profile for a zero branch: inline JSON array or a file")
    i.add_argument("--zero-fill", type=float, default=1.0, metavar="W",
                   help="weight for cycle edges with a zero difference (default 1)")
    i.add_argument("--h", dest="h_value", type=float, default=None, metavar="H",
                   help="override the cycle free parameter")
    i.add_argument("--verify", action="store_true",
                   help="re-derive every claim from the output weights; exit 1 on failure")
    i.set_defaults(func=cmd_inverse)

    f = sub.add_parser("forward", help="spectral analysis of a weighted graph")
    f.add_argument("graph")
    f.set_defaults(func=cmd_forward)

    t = sub.add_parser("transform", help="characteristic contraction / subdivision")
    t.add_argument("graph")
    group = t.add_mutually_exclusive_group(required=True)
    group.add_argument("--contract", action="store_true")
    group.add_argument("--subdivide", action="store_true")
    t.set_defaults(func=cmd_transform)

    g = sub.add_parser("gen", help="generate test data (seed with FIEDLER_SEED)")
    gsub = g.add_subparsers(dest="what", required=True)
    gt = gsub.add_parser("tree")
    gt.add_argument("--n", type=int, required=True)
    gt.add_argument("--weights", action="store_true")
    gc = gsub.add_parser("cycle")
    gc.add_argument("--n", type=int, required=True)
    gc.add_argument("--weights", action="store_true")
    gv = gsub.add_parser("vector")
    gv.add_argument("graph")
    gv.add_argument("--kind", choices=("type1", "type2", "any"), default="any")
    gcv = gsub.add_parser("cycle-vector")
    gcv.add_argument("--n", type=int, required=True)
    gcv.add_argument("--zeros", type=int, choices=(0, 1, 2), default=None)
    g.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        _fail(str(exc))
        return 2
    except _INADMISSIBLE_ERRORS as exc:
        _fail(str(exc))
        return 3


def entrypoint() -> None:
    raise SystemExit(main())
