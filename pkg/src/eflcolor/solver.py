"""Exact backtracking searches at desk scale.

Three engines: the chromatic number of a small EFL graph, palette-limited
coloring of a clique decomposition, and exhaustive enumeration of the
decompositions of K_n whose cliques all have size 2 or size r, swept for
n-colorability.  Searches are deterministic: fail-first branching (fewest
feasible colors, ties to the lowest index), with symmetry fixing that
pre-colors one clique to collapse color permutations.  A negative answer
is reported only after the search space is exhausted; running out of node
budget is a distinct outcome, never conflated with a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from time import perf_counter
from typing import Callable, Iterator, Optional

from .coloring import FullColoring, check_proper
from .core import EflGraph, Rejection, vertex_key
from .decomposition import (
    CliqueDecomposition,
    DecompositionColoring,
    check_decomposition_coloring,
    complete_host,
    validate_decomposition,
)

__all__ = [
    "BudgetExhausted",
    "Status",
    "SearchConfig",
    "SearchOutcome",
    "ChromaticResult",
    "chromatic_number",
    "color_decomposition",
    "SweepInstance",
    "enumerate_two_r_decompositions",
    "SweepReport",
    "sweep_two_r_decompositions",
    "greedy_baseline",
]


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before finishing."""

    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class Status(Enum):
    COLORABLE = "colorable"
    NOT_COLORABLE = "not_colorable"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchConfig:
    """Search knobs.

    node_limit bounds the number of color placements tried;
    symmetry_fixing pre-colors a clique (always sound, usually decisive);
    deterministic_order is fixed true in this version.  progress, when
    set, is called with the running node count every progress_interval
    placements.
    """

    node_limit: int = 10**8
    symmetry_fixing: bool = True
    deterministic_order: bool = True
    progress: Optional[Callable[[int], None]] = field(
        default=None, compare=False
    )
    progress_interval: int = field(default=10**6, compare=False)

    def __post_init__(self):
        if self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")
        if not self.deterministic_order:
            raise ValueError("only deterministic search order is supported")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one palette-limited search.

    A COLORABLE certificate always passes the decomposition checker;
    NOT_COLORABLE means the space was exhausted.
    """

    status: Status
    certificate: Optional[DecompositionColoring]
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic number with a verified witness coloring."""

    value: int
    witness: FullColoring
    nodes: int
    elapsed: float


def _search(neighbors, palette, preset, node_limit, progress=None,
            interval=10**6):
    """Fail-first backtracking coloring over an indexed adjacency list.

    Returns (found, colors, nodes): found True with a complete 1-based
    color list, False after exhausting the space.  preset pairs are
    applied first and count as nodes; an infeasible preset (a clique
    larger than the palette) exhausts the space immediately because
    presets are symmetry-canonical.  Raises BudgetExhausted past
    node_limit.
    """
    m = len(neighbors)
    color = [0] * m
    blocked = [[0] * (palette + 1) for _ in range(m)]
    avail = [palette] * m
    state = {"uncolored": m, "nodes": 0}

    def place(v, c):
        color[v] = c
        state["uncolored"] -= 1
        for u in neighbors[v]:
            if not color[u]:
                b = blocked[u]
                b[c] += 1
                if b[c] == 1:
                    avail[u] -= 1

    def unplace(v, c):
        color[v] = 0
        state["uncolored"] += 1
        for u in neighbors[v]:
            if not color[u]:
                b = blocked[u]
                b[c] -= 1
                if b[c] == 0:
                    avail[u] += 1

    def tick():
        state["nodes"] += 1
        if state["nodes"] > node_limit:
            raise BudgetExhausted(state["nodes"])
        if progress is not None and state["nodes"] % interval == 0:
            progress(state["nodes"])

    for v, c in preset:
        if c > palette or blocked[v][c]:
            return False, None, state["nodes"]
        tick()
        place(v, c)

    def extend():
        if state["uncolored"] == 0:
            return True
        best, best_avail = -1, palette + 1
        for v in range(m):
            if not color[v] and avail[v] < best_avail:
                best, best_avail = v, avail[v]
                if best_avail == 0:
                    break
        bl = blocked[best]
        for c in range(1, palette + 1):
            if not bl[c]:
                tick()
                place(best, c)
                if extend():
                    return True
                unplace(best, c)
        return False

    found = extend()
    return found, (color[:] if found else None), state["nodes"]


def _greedy_clique(neighbors):
    """Deterministic clique: seed at the highest-degree vertex (ties to the
    lowest index), grow by the smallest common neighbor."""
    m = len(neighbors)
    if m == 0:
        return []
    nsets = [set(ns) for ns in neighbors]
    seed = max(range(m), key=lambda v: (len(nsets[v]), -v))
    clique = [seed]
    cands = sorted(nsets[seed])
    while cands:
        v = cands[0]
        clique.append(v)
        cands = [u for u in cands[1:] if u in nsets[v]]
    return sorted(clique)


def chromatic_number(
    g: EflGraph, cfg: SearchConfig = SearchConfig()
) -> ChromaticResult:
    """Exact chromatic number of a small EFL graph, with a witness.

    The defining clique Q_1 forces chi >= n, so palettes are tried upward
    from n; the first success is exact.  With symmetry fixing Q_1 is
    pre-colored 1..n in vertex order, which is sound because any proper
    coloring permutes onto such an assignment.  Raises BudgetExhausted
    when the cumulative node budget runs out.
    """
    t0 = perf_counter()
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    neighbors = [[] for _ in verts]
    for q in g.cliques:
        qi = sorted(index[v] for v in q)
        # any vertex pair lies in at most one clique, so no duplicate edges
        for a, b in combinations(qi, 2):
            neighbors[a].append(b)
            neighbors[b].append(a)
    preset = []
    if cfg.symmetry_fixing:
        q1 = sorted(g.cliques[0], key=vertex_key)
        preset = [(index[v], c) for c, v in enumerate(q1, start=1)]
    total_nodes = 0
    k = g.n
    while True:
        try:
            found, colors, nodes = _search(
                neighbors,
                k,
                preset,
                cfg.node_limit - total_nodes,
                cfg.progress,
                cfg.progress_interval,
            )
        except BudgetExhausted as e:
            raise BudgetExhausted(total_nodes + e.nodes) from None
        total_nodes += nodes
        if found:
            witness = FullColoring(
                k, {verts[i]: c for i, c in enumerate(colors)}
            )
            chk = check_proper(g, witness)
            if not chk:
                raise AssertionError(
                    f"solver produced an improper witness: {chk.reason}"
                )
            return ChromaticResult(
                k, witness, total_nodes, perf_counter() - t0
            )
        k += 1


def color_decomposition(
    d: CliqueDecomposition, palette: int, cfg: SearchConfig = SearchConfig()
) -> SearchOutcome:
    """Search for a coloring of d's cliques within the given palette.

    Branches on the intersection graph with fail-first ordering.  With
    symmetry fixing, a greedily grown clique of the intersection graph is
    pre-colored 1, 2, ...; when that clique alone exceeds the palette the
    space is exhausted with no search.  COLORABLE certificates are
    re-checked before returning.
    """
    t0 = perf_counter()
    k = len(d.cliques)
    sets = [set(c) for c in d.cliques]
    neighbors = [[] for _ in range(k)]
    for s, t in combinations(range(k), 2):
        if not sets[s].isdisjoint(sets[t]):
            neighbors[s].append(t)
            neighbors[t].append(s)
    preset = []
    if cfg.symmetry_fixing and k:
        preset = [
            (v, c) for c, v in enumerate(_greedy_clique(neighbors), start=1)
        ]
    try:
        found, colors, nodes = _search(
            neighbors,
            max(palette, 0),
            preset,
            cfg.node_limit,
            cfg.progress,
            cfg.progress_interval,
        )
    except BudgetExhausted as e:
        return SearchOutcome(
            Status.BUDGET_EXHAUSTED, None, e.nodes, perf_counter() - t0
        )
    if not found:
        return SearchOutcome(
            Status.NOT_COLORABLE, None, nodes, perf_counter() - t0
        )
    cert = DecompositionColoring(
        palette, {t + 1: colors[t] for t in range(k)}
    )
    if k == 0 or palette <= d.host.vertex_count:
        chk = check_decomposition_coloring(d, cert)
        if not chk:
            raise AssertionError(
                f"solver certificate failed verification: {chk.reason}"
            )
    return SearchOutcome(Status.COLORABLE, cert, nodes, perf_counter() - t0)


@dataclass(frozen=True)
class SweepInstance:
    """A decomposition of K_n whose cliques all have size 2 or size r."""

    n: int
    r: int
    decomposition: CliqueDecomposition


def enumerate_two_r_decompositions(n: int, r: int) -> Iterator[SweepInstance]:
    """Yield every labeled decomposition of K_n into 2-cliques and r-cliques.

    Backtracks on the lexicographically smallest uncovered edge, trying
    the r-cliques through it in lexicographic order before settling for a
    2-clique, so every decomposition appears exactly once (the clique
    covering the smallest undecided edge is forced at each step).  The
    first instance yielded is therefore the greedy lexicographic r-clique
    packing.  Labeled level only: no isomorph rejection.  r may equal n
    (the whole of K_n is then one admissible clique).
    """
    if not 3 <= r <= n:
        raise ValueError(f"need 3 <= r <= n, got r={r}, n={n}")
    host = complete_host(n)
    edges = sorted(host.edges)
    covered = set()
    chosen = []

    def leaf() -> SweepInstance:
        r_edges = set()
        for c in chosen:
            r_edges.update(combinations(c, 2))
        cliques = list(chosen) + [e for e in edges if e not in r_edges]
        d = validate_decomposition(host, cliques)
        if isinstance(d, Rejection):
            raise AssertionError(
                f"enumerator produced an invalid decomposition: {d.message}"
            )
        return SweepInstance(n, r, d)

    def rec():
        e = next((f for f in edges if f not in covered), None)
        if e is None:
            yield leaf()
            return
        i, j = e
        others = [v for v in range(1, n + 1) if v != i and v != j]
        for extra in combinations(others, r - 2):
            cand = tuple(sorted((i, j) + extra))
            cand_edges = list(combinations(cand, 2))
            if any(f in covered for f in cand_edges):
                continue
            covered.update(cand_edges)
            chosen.append(cand)
            yield from rec()
            chosen.pop()
            covered.difference_update(cand_edges)
        covered.add(e)
        yield from rec()
        covered.discard(e)

    yield from rec()


@dataclass
class SweepReport:
    """Aggregate of one colorability sweep, keyed by canonical clique lists."""

    n: int
    r: int
    instances: int
    colorable: int
    not_colorable: list
    budget_exhausted: list
    max_nodes: int
    min_palettes: Optional[list] = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "r": self.r,
            "instances": self.instances,
            "colorable": self.colorable,
            "not_colorable": self.not_colorable,
            "budget_exhausted": self.budget_exhausted,
            "max_nodes": self.max_nodes,
        }
        if self.min_palettes is not None:
            out["min_palettes"] = self.min_palettes
        return out


def sweep_two_r_decompositions(
    n: int,
    r: int,
    cfg: SearchConfig = SearchConfig(),
    minimum_palettes: bool = False,
) -> SweepReport:
    """Color every decomposition of K_n with clique sizes {2, r} using
    palette n and report the totals.

    An instance that is not n-colorable would contradict the n-coloring
    claim for complete-host decompositions and is listed by its canonical
    clique list; budget exhaustions are listed separately, never dropped.
    With minimum_palettes, each colorable instance is probed downward for
    the least sufficient palette.
    """
    total = colorable = max_nodes = 0
    not_col, budget, minimums = [], [], []
    for inst in enumerate_two_r_decompositions(n, r):
        d = inst.decomposition
        out = color_decomposition(d, n, cfg)
        total += 1
        max_nodes = max(max_nodes, out.nodes)
        key = [list(c) for c in d.cliques]
        if out.status is Status.COLORABLE:
            colorable += 1
            if minimum_palettes:
                p = n
                while p > 0:
                    probe = color_decomposition(d, p - 1, cfg)
                    if probe.status is not Status.COLORABLE:
                        break
                    p -= 1
                minimums.append({"cliques": key, "min_palette": p})
        elif out.status is Status.NOT_COLORABLE:
            not_col.append(key)
        else:
            budget.append(key)
    not_col.sort()
    budget.sort()
    minimums.sort(key=lambda entry: entry["cliques"])
    return SweepReport(
        n,
        r,
        total,
        colorable,
        not_col,
        budget,
        max_nodes,
        minimums if minimum_palettes else None,
    )


def greedy_baseline(d: CliqueDecomposition) -> DecompositionColoring:
    """Greedy coloring of the intersection graph in descending-degree order.

    Ties break to the lower index; each clique takes the smallest color
    its vertex-sharing predecessors avoid.  Never needs more colors than
    the maximum intersection degree plus one, making it a cheap upper
    bound to compare against exact search.
    """
    k = len(d.cliques)
    sets = [set(c) for c in d.cliques]
    neighbors = [[] for _ in range(k)]
    for s, t in combinations(range(k), 2):
        if not sets[s].isdisjoint(sets[t]):
            neighbors[s].append(t)
            neighbors[t].append(s)
    order = sorted(range(k), key=lambda v: (-len(neighbors[v]), v))
    colors: dict = {}
    for v in order:
        used = {colors[u + 1] for u in neighbors[v] if u + 1 in colors}
        c = 1
        while c in used:
            c += 1
        colors[v + 1] = c
    return DecompositionColoring(max(colors.values(), default=0), colors)
