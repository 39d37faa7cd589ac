"""Clique decompositions of host graphs and their EFL correspondence.

A clique decomposition of a simple host graph H is a family of cliques
covering every edge of H exactly once.  Coloring the decomposition means
assigning colors to its cliques so that vertex-intersecting cliques
differ, which is exactly a proper coloring of the family's intersection
graph.  EFL graphs and clique decompositions translate into each other:
defining cliques become host vertices and shared vertices become
decomposition cliques, so an n-coloring of the decomposition transports
back to a proper coloring of the shared vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .coloring import ProperCheck, SharedColoring
from .core import (
    EflGraph,
    GeneralVertex,
    Rejection,
    SharedVertex,
    TwoCliqueEflGraph,
    UnsharedVertex,
)

__all__ = [
    "HostGraph",
    "CliqueDecomposition",
    "DecompositionColoring",
    "CliqueCapacityError",
    "complete_host",
    "validate_decomposition",
    "intersection_graph",
    "efl_to_decomposition",
    "decomposition_to_efl",
    "check_decomposition_coloring",
    "transport_coloring",
]


class CliqueCapacityError(ValueError):
    """A host vertex lies in more decomposition cliques than a defining
    n-clique can host as shared vertices."""


@dataclass(frozen=True)
class HostGraph:
    """Simple graph on vertices {1, ..., vertex_count}; edges are sorted pairs."""

    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.vertex_count):
                raise ValueError(
                    f"edge {e} invalid for a simple graph on "
                    f"{self.vertex_count} vertices"
                )

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "HostGraph":
        """Normalize arbitrary unordered pairs (loops and range errors raise)."""
        norm = set()
        for u, v in edges:
            norm.add((u, v) if u < v else (v, u))
        return cls(vertex_count, frozenset(norm))

    @property
    def is_complete(self) -> bool:
        return len(self.edges) == comb(self.vertex_count, 2)


def complete_host(n: int) -> HostGraph:
    """The complete graph K_n."""
    return HostGraph(n, frozenset(combinations(range(1, n + 1), 2)))


@dataclass(frozen=True)
class CliqueDecomposition:
    """Host graph plus cliques partitioning its edge set.

    Cliques are sorted vertex tuples in canonical order (size, then
    lexicographic), so equal decompositions serialize identically.
    """

    host: HostGraph
    cliques: tuple


@dataclass(frozen=True)
class DecompositionColoring:
    """Colors for the cliques of a decomposition, keyed by canonical index."""

    palette_size: int
    colors: dict


def canonical_cliques(cliques: Iterable) -> tuple:
    """Sorted vertex tuples ordered by (size, lexicographic vertex set)."""
    return tuple(
        sorted((tuple(sorted(c)) for c in cliques), key=lambda c: (len(c), c))
    )


def validate_decomposition(host: HostGraph, cliques: Iterable):
    """Check the edge-partition and clique-completeness invariants.

    Returns the decomposition with cliques in canonical order, or a
    Rejection naming the first offense in a fixed scan order: a repeated
    vertex, an undersized clique, an out-of-range vertex, a non-edge
    inside a clique, a doubly covered edge, then the lexicographically
    first uncovered edge.
    """
    canon = []
    for c in cliques:
        c = tuple(c)
        if len(set(c)) != len(c):
            return Rejection(
                "clique-vertices", f"clique {c} repeats a vertex", (c,)
            )
        canon.append(tuple(sorted(c)))
    canon.sort(key=lambda c: (len(c), c))
    covered = set()
    for t, c in enumerate(canon, start=1):
        if len(c) < 2:
            return Rejection(
                "clique-size",
                f"clique {t} has {len(c)} vertices; decomposition cliques "
                "must carry at least one edge",
                (t,),
            )
        for v in c:
            if not 1 <= v <= host.vertex_count:
                return Rejection(
                    "vertex-range",
                    f"clique {t} names vertex {v}, outside 1.."
                    f"{host.vertex_count}",
                    (t, v),
                )
        for e in combinations(c, 2):
            if e not in host.edges:
                return Rejection(
                    "not-a-clique",
                    f"clique {t} spans {e}, which is not a host edge",
                    (t, e),
                )
            if e in covered:
                return Rejection(
                    "edge-covered-twice",
                    f"edge {e} belongs to two cliques",
                    e,
                )
            covered.add(e)
    for e in sorted(host.edges):
        if e not in covered:
            return Rejection(
                "edge-uncovered", f"edge {e} belongs to no clique", e
            )
    return CliqueDecomposition(host, tuple(canon))


def intersection_graph(d: CliqueDecomposition) -> HostGraph:
    """Graph on clique indices 1..k, joined when the cliques share a vertex.

    A decomposition coloring is valid exactly when it is a proper vertex
    coloring of this graph.
    """
    k = len(d.cliques)
    sets = [set(c) for c in d.cliques]
    edges = set()
    for s, t in combinations(range(k), 2):
        if not sets[s].isdisjoint(sets[t]):
            edges.add((s + 1, t + 1))
    return HostGraph(k, frozenset(edges))


def efl_to_decomposition(g: EflGraph) -> CliqueDecomposition:
    """Translate an EFL graph into a clique decomposition of its index graph.

    Host vertex i stands for defining clique Q_i; {i, j} is a host edge
    iff Q_i and Q_j intersect; every shared vertex contributes the clique
    of the indices containing it.  Works for any EFL graph, including
    shared vertices in three or more cliques.
    """
    cliques = [g.membership[v] for v in g.shared]
    edges = set()
    for c in cliques:
        edges.update(combinations(c, 2))
    host = HostGraph(g.n, frozenset(edges))
    d = validate_decomposition(host, cliques)
    if isinstance(d, Rejection):
        raise AssertionError(
            f"EFL invariants should guarantee a valid decomposition: {d.message}"
        )
    return d


def decomposition_to_efl(d: CliqueDecomposition) -> EflGraph:
    """Inverse translation: one defining n-clique per host vertex.

    Decomposition clique D_t becomes one shared vertex placed in the
    defining cliques its host vertices index: a SharedVertex for a
    2-clique, a GeneralVertex labeled t otherwise.  Defining cliques are
    padded to order n with slot-numbered unshared vertices.  Raises
    CliqueCapacityError when a host vertex lies in more than n cliques
    (impossible for a validated decomposition of a simple host, whose
    vertex degrees bound the clique count, but guarded for direct input).
    """
    n = d.host.vertex_count
    if n < 2:
        raise ValueError(f"host must have >= 2 vertices, got {n}")
    members: list = [[] for _ in range(n + 1)]
    shared = []
    for t, c in enumerate(d.cliques, start=1):
        v = SharedVertex(c[0], c[1]) if len(c) == 2 else GeneralVertex(t)
        for i in c:
            members[i].append(v)
        shared.append(v)
    cliques = []
    for i in range(1, n + 1):
        ms = members[i]
        if len(ms) > n:
            raise CliqueCapacityError(
                f"host vertex {i} lies in {len(ms)} cliques; defining "
                f"clique {i} can hold at most {n} shared vertices"
            )
        pad = n - len(ms)
        ms.extend(UnsharedVertex(i, s) for s in range(1, pad + 1))
        cliques.append(frozenset(ms))
    two = all(len(c) == 2 for c in d.cliques)
    cls = TwoCliqueEflGraph if two else EflGraph
    return cls(n, tuple(cliques), frozenset(shared))


def check_decomposition_coloring(
    d: CliqueDecomposition, coloring: DecompositionColoring
) -> ProperCheck:
    """Check a coloring as an n-coloring of (host, cliques).

    n is the host order: a coloring whose palette exceeds it is not an
    n-coloring and fails.  Vertex-intersecting cliques must receive
    distinct colors; the first violating index pair (lexicographic) is
    reported.  Raises ValueError when the coloring is not total on the
    cliques or steps outside its own palette.
    """
    k = len(d.cliques)
    cmap = coloring.colors
    for t in range(1, k + 1):
        if t not in cmap:
            raise ValueError(f"coloring misses clique {t}")
        c = cmap[t]
        if not 1 <= c <= coloring.palette_size:
            raise ValueError(
                f"clique {t} has color {c} outside 1..{coloring.palette_size}"
            )
    if len(cmap) != k:
        extra = sorted(set(cmap) - set(range(1, k + 1)))
        raise ValueError(f"coloring names unknown clique index {extra[0]}")
    if k > 0 and coloring.palette_size > d.host.vertex_count:
        return ProperCheck(
            False,
            None,
            f"palette {coloring.palette_size} exceeds the host order "
            f"{d.host.vertex_count}",
        )
    for s, t in sorted(intersection_graph(d).edges):
        if cmap[s] == cmap[t]:
            return ProperCheck(
                False,
                (s, t),
                f"cliques {s} and {t} share a vertex and color {cmap[s]}",
            )
    return ProperCheck(True)


def transport_coloring(
    d: CliqueDecomposition, coloring: DecompositionColoring, g: EflGraph
) -> SharedColoring:
    """Carry a decomposition coloring over to the shared vertices of g.

    ``d`` must equal ``efl_to_decomposition(g)``; the shared vertex whose
    containing cliques form D_t gets the color of D_t.  The result is
    proper on the shared vertices whenever the input coloring passes
    :func:`check_decomposition_coloring`.
    """
    if d != efl_to_decomposition(g):
        raise ValueError("decomposition does not correspond to this graph")
    chk = check_decomposition_coloring(d, coloring)
    if not chk:
        raise ValueError(f"invalid decomposition coloring: {chk.reason}")
    index_of = {c: t for t, c in enumerate(d.cliques, start=1)}
    out = {
        v: coloring.colors[index_of[g.membership[v]]] for v in g.shared
    }
    return SharedColoring(coloring.palette_size, out)
