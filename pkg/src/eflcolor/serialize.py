"""JSON and DOT wire formats.

Vertex identities are encoded as tagged lists: ["shared", i, j],
["unshared", clique, slot], ["general", label].  Graphs round-trip as
{"n", "shared_pairs", "cliques"?}: the explicit clique lists appear only
when the shared pairs alone do not reconstruct the graph.  Emitted
collections are always sorted so output is byte-stable.
"""

from __future__ import annotations

import json

from .core import (
    EflGraph,
    GeneralVertex,
    Rejection,
    SharedVertex,
    UnsharedVertex,
    build_from_pairs,
    validate,
    vertex_key,
)
from .decomposition import (
    CliqueDecomposition,
    DecompositionColoring,
    HostGraph,
    complete_host,
    intersection_graph,
    validate_decomposition,
)

__all__ = [
    "FormatError",
    "vertex_to_json",
    "vertex_from_json",
    "graph_to_json",
    "graph_from_json",
    "coloring_to_json",
    "vertex_coloring_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "decomposition_coloring_to_json",
    "decomposition_coloring_from_json",
    "host_dot",
    "intersection_dot",
    "dumps",
]


class FormatError(ValueError):
    """Input does not match the expected schema."""


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def vertex_to_json(v) -> list:
    if isinstance(v, SharedVertex):
        return ["shared", v.i, v.j]
    if isinstance(v, UnsharedVertex):
        return ["unshared", v.clique, v.slot]
    if isinstance(v, GeneralVertex):
        return ["general", v.label]
    raise FormatError(f"vertex {v!r} has no JSON encoding")


def vertex_from_json(obj):
    if not isinstance(obj, list) or not obj or not isinstance(obj[0], str):
        raise FormatError(f"bad vertex encoding: {obj!r}")
    tag, *rest = obj
    try:
        if tag == "shared":
            return SharedVertex(*map(int, rest))
        if tag == "unshared":
            return UnsharedVertex(*map(int, rest))
        if tag == "general":
            (label,) = rest
            return GeneralVertex(int(label))
    except (TypeError, ValueError) as e:
        raise FormatError(f"bad vertex encoding {obj!r}: {e}") from None
    raise FormatError(f"unknown vertex tag {tag!r}")


def graph_to_json(g: EflGraph) -> dict:
    pairs = sorted(
        tuple(g.membership[v])
        for v in g.shared
        if len(g.membership[v]) == 2
    )
    out = {"n": g.n, "shared_pairs": [list(p) for p in pairs]}
    canonical = False
    if len(pairs) == len(g.shared):
        try:
            canonical = build_from_pairs(g.n, pairs) == g
        except ValueError:
            canonical = False
    if not canonical:
        out["cliques"] = [
            [vertex_to_json(v) for v in sorted(q, key=vertex_key)]
            for q in g.cliques
        ]
    return out


def graph_from_json(data) -> EflGraph:
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise FormatError('graph JSON needs an integer "n"')
    n = data["n"]
    if "cliques" in data and data["cliques"] is not None:
        if not isinstance(data["cliques"], list):
            raise FormatError('"cliques" must be a list of vertex lists')
        cliques = [
            frozenset(vertex_from_json(v) for v in q) for q in data["cliques"]
        ]
        g = validate(cliques, n)
        if isinstance(g, Rejection):
            raise FormatError(f"invalid graph: {g.message}")
        return g
    pairs = data.get("shared_pairs")
    if not isinstance(pairs, list):
        raise FormatError('graph JSON needs "shared_pairs" or "cliques"')
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise FormatError('"shared_pairs" entries must be [i, j] pairs')
    try:
        return build_from_pairs(n, [(int(i), int(j)) for i, j in pairs])
    except (ValueError, TypeError) as e:
        raise FormatError(f"invalid graph: {e}") from None


def coloring_to_json(coloring) -> dict:
    items = sorted(coloring.colors.items(), key=lambda kv: vertex_key(kv[0]))
    return {
        "palette": coloring.palette_size,
        "assignments": [
            {"vertex": vertex_to_json(v), "color": c} for v, c in items
        ],
    }


def vertex_coloring_from_json(data) -> tuple:
    """Returns (palette, {vertex: color}); the caller decides shared vs full."""
    if not isinstance(data, dict) or not isinstance(data.get("palette"), int):
        raise FormatError('coloring JSON needs an integer "palette"')
    if not isinstance(data.get("assignments"), list):
        raise FormatError('coloring JSON needs an "assignments" list')
    colors = {}
    for entry in data["assignments"]:
        if not isinstance(entry, dict) or "vertex" not in entry:
            raise FormatError(f"bad assignment entry: {entry!r}")
        if not isinstance(entry.get("color"), int):
            raise FormatError(f"bad color in entry: {entry!r}")
        colors[vertex_from_json(entry["vertex"])] = entry["color"]
    return data["palette"], colors


def decomposition_to_json(d: CliqueDecomposition) -> dict:
    host = (
        "complete"
        if d.host.is_complete
        else [list(e) for e in sorted(d.host.edges)]
    )
    return {
        "n": d.host.vertex_count,
        "host_edges": host,
        "cliques": [list(c) for c in d.cliques],
    }


def decomposition_from_json(data) -> CliqueDecomposition:
    if not isinstance(data, dict) or not isinstance(data.get("n"), int):
        raise FormatError('decomposition JSON needs an integer "n"')
    n = data["n"]
    raw = data.get("host_edges")
    try:
        if raw == "complete":
            host = complete_host(n)
        elif isinstance(raw, list):
            host = HostGraph.from_edges(
                n, [(int(e[0]), int(e[1])) for e in raw]
            )
        else:
            raise FormatError(
                '"host_edges" must be "complete" or a list of pairs'
            )
    except (ValueError, TypeError, IndexError) as e:
        raise FormatError(f"invalid host: {e}") from None
    if not isinstance(data.get("cliques"), list):
        raise FormatError('decomposition JSON needs a "cliques" list')
    d = validate_decomposition(
        host, [tuple(int(v) for v in c) for c in data["cliques"]]
    )
    if isinstance(d, Rejection):
        raise FormatError(f"invalid decomposition: {d.message}")
    return d


def decomposition_coloring_to_json(c: DecompositionColoring) -> dict:
    return {
        "palette": c.palette_size,
        "assignments": [
            {"clique": t, "color": c.colors[t]} for t in sorted(c.colors)
        ],
    }


def decomposition_coloring_from_json(data) -> DecompositionColoring:
    if not isinstance(data, dict) or not isinstance(data.get("palette"), int):
        raise FormatError('coloring JSON needs an integer "palette"')
    if not isinstance(data.get("assignments"), list):
        raise FormatError('coloring JSON needs an "assignments" list')
    colors = {}
    for entry in data["assignments"]:
        if (
            not isinstance(entry, dict)
            or not isinstance(entry.get("clique"), int)
            or not isinstance(entry.get("color"), int)
        ):
            raise FormatError(f"bad assignment entry: {entry!r}")
        colors[entry["clique"]] = entry["color"]
    return DecompositionColoring(data["palette"], colors)


def host_dot(host: HostGraph, name: str = "host") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(1, host.vertex_count + 1))
    lines.extend(f"  {i} -- {j};" for i, j in sorted(host.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def intersection_dot(d: CliqueDecomposition) -> str:
    ig = intersection_graph(d)
    lines = ["graph intersection {"]
    for t, c in enumerate(d.cliques, start=1):
        label = ",".join(map(str, c))
        lines.append(f'  {t} [label="D{t}: {label}"];')
    lines.extend(f"  {s} -- {t};" for s, t in sorted(ig.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
