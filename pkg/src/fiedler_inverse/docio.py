"""JSON documents for graphs, vectors, and weight maps.

Files use 1-based vertex labels to match hand-drawn figures; everything
internal stays 0-based, and the translation happens only here.  Weight
maps are keyed ``"i-j"`` with ``i < j``.

The writer is deterministic: keys come out in the order the dicts were
built (which this module keeps canonical) and floats are printed with
``%.17g``, so identical inputs always produce identical bytes.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .graphs import Cycle, Tree, WeightAssignment

GRAPH_KINDS = ("tree", "cycle", "complete")
_DOCUMENT_FIELDS = {"kind", "n", "edges", "weights", "labels"}


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph file: structure plus optional weights and labels."""

    kind: str
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    weights: WeightAssignment | None = None
    labels: tuple[str, ...] | None = None

    def graph(self):
        """The graph-core object, for kinds that have one."""
        if self.kind == "tree":
            return Tree(self.n, self.edges)
        if self.kind == "cycle":
            return Cycle(self.n)
        raise InvalidInputError("complete graphs support classification only")


def parse_graph_document(data: object) -> GraphDocument:
    """Validate a decoded JSON object and return the document.

    Raises InvalidInputError with a field-level diagnostic on any
    malformed content; the CLI prefixes the file name.
    """
    if not isinstance(data, dict):
        raise InvalidInputError("graph document must be a JSON object")
    unknown = set(data) - _DOCUMENT_FIELDS
    if unknown:
        raise InvalidInputError(f"unknown field {sorted(unknown)[0]!r}")
    kind = data.get("kind")
    if kind not in GRAPH_KINDS:
        raise InvalidInputError(
            f"kind must be one of {', '.join(GRAPH_KINDS)}, got {kind!r}"
        )
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")

    if kind == "tree":
        raw = data.get("edges")
        if raw is None:
            raise InvalidInputError("tree documents need an edge list")
        if not isinstance(raw, list):
            raise InvalidInputError("edges must be a JSON array of [i, j] pairs")
        edges = tuple(_parse_edge(entry, n, pos) for pos, entry in enumerate(raw))
        graph = Tree(n, edges)
        edges = graph.edges
    else:
        if "edges" in data:
            raise InvalidInputError(f"edges are implied for kind {kind!r}")
        graph = Cycle(n) if kind == "cycle" else None
        edges = graph.edges if graph is not None else ()

    weights = None
    if data.get("weights") is not None:
        raw_w = data["weights"]
        if not isinstance(raw_w, dict):
            raise InvalidInputError('weights must be a JSON object keyed "i-j"')
        mapping: dict[tuple[int, int], float] = {}
        if kind == "complete":
            allowed = None
        else:
            allowed = set(edges)
        for key, value in raw_w.items():
            pair = _parse_weight_key(key, n)
            if allowed is not None and pair not in allowed:
                raise InvalidInputError(f'weights["{key}"]: no such edge')
            if pair in mapping:
                raise InvalidInputError(f'weights["{key}"]: duplicate edge')
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvalidInputError(f'weights["{key}"]: not a number')
            if not math.isfinite(value) or value <= 0:
                raise InvalidInputError(
                    f'weights["{key}"]: must be a positive finite number'
                )
            mapping[pair] = float(value)
        weights = WeightAssignment(mapping)

    labels = None
    if data.get("labels") is not None:
        raw_l = data["labels"]
        if (
            not isinstance(raw_l, list)
            or len(raw_l) != n
            or not all(isinstance(s, str) for s in raw_l)
        ):
            raise InvalidInputError(f"labels must be a list of {n} strings")
        labels = tuple(raw_l)

    return GraphDocument(kind=kind, n=n, edges=edges, weights=weights, labels=labels)


def _parse_edge(entry: object, n: int, pos: int) -> tuple[int, int]:
    if (
        not isinstance(entry, list)
        or len(entry) != 2
        or any(isinstance(v, bool) or not isinstance(v, int) for v in entry)
    ):
        raise InvalidInputError(f"edges[{pos}]: expected a pair of integers")
    i, j = entry
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise InvalidInputError(
            f"edges[{pos}]: labels must be distinct and in 1..{n}, got [{i}, {j}]"
        )
    return (min(i, j) - 1, max(i, j) - 1)


def _parse_weight_key(key: str, n: int) -> tuple[int, int]:
    parts = key.split("-")
    if len(parts) == 2:
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            i = j = 0
        if 1 <= i <= n and 1 <= j <= n and i != j:
            return (min(i, j) - 1, max(i, j) - 1)
    raise InvalidInputError(
        f'weights["{key}"]: keys look like "i-j" with labels in 1..{n}'
    )


def parse_vector(data: object, n: int) -> np.ndarray:
    """Decode a JSON array of n finite numbers into a float vector.

    Integer zeros in the file come through as exact 0.0, which the
    inverse constructions rely on.
    """
    if not isinstance(data, list):
        raise InvalidInputError("vector file must be a JSON array")
    if len(data) != n:
        raise InvalidInputError(
            f"vector has {len(data)} entries for a graph on {n} vertices"
        )
    out = np.empty(n)
    for i, value in enumerate(data):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidInputError(f"entry {i + 1} is not a number")
        if not math.isfinite(value):
            raise InvalidInputError(f"entry {i + 1} is not finite")
        out[i] = float(value)
    return out


def weight_key(pair: tuple[int, int]) -> str:
    i, j = min(pair), max(pair)
    return f"{i + 1}-{j + 1}"


def weights_to_dict(weights: WeightAssignment, edge_order) -> dict[str, float]:
    """Weight map keyed "i-j", in the given edge order."""
    return {weight_key(pair): weights[pair] for pair in edge_order}


def edge_order_for(graph) -> tuple[tuple[int, int], ...]:
    """Canonical emission order: position order on cycles, sorted on trees."""
    if isinstance(graph, Cycle):
        return graph.edge_pairs
    return graph.edges


def document_to_dict(doc: GraphDocument) -> dict:
    out: dict = {"kind": doc.kind, "n": doc.n}
    if doc.kind == "tree":
        out["edges"] = [[i + 1, j + 1] for i, j in doc.edges]
    if doc.weights is not None:
        graph = doc.graph()
        out["weights"] = weights_to_dict(doc.weights, edge_order_for(graph))
    if doc.labels is not None:
        out["labels"] = list(doc.labels)
    return out


def vector_to_list(x: np.ndarray) -> list[float]:
    return [float(v) for v in np.asarray(x)]


def _emit(obj: object, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            if not isinstance(key, str):
                raise TypeError(f"non-string key {key!r}")
            out.append(json.dumps(key))
            out.append(":")
            _emit(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(",")
            _emit(value, out)
        out.append("]")
    elif isinstance(obj, bool) or obj is None:
        out.append("true" if obj is True else "false" if obj is False else "null")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        value = float(obj)
        if not math.isfinite(value):
            raise TypeError(f"non-finite float {value!r}")
        out.append("%.17g" % value)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: object) -> str:
    """Compact deterministic JSON: insertion-ordered keys, %.17g floats."""
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)
