"""Independent brute-force oracles shared across the test modules.

Everything here recomputes answers from first principles (pairwise scans,
exhaustive enumeration) so the library's own fast paths are never trusted
to check themselves.
"""

from itertools import combinations, product

from eflcolor.core import EflGraph


def brute_force_proper(g: EflGraph, colors: dict) -> bool:
    """Pairwise adjacency scan; ignores vertices outside the coloring."""
    verts = [v for v in g.vertex_set if v in colors]
    for u, w in combinations(verts, 2):
        together = any(u in q and w in q for q in g.cliques)
        if together and colors[u] == colors[w]:
            return False
    return True


def brute_force_chromatic(g: EflGraph, max_k: int = 8) -> int:
    """Try every assignment outright; only usable for a handful of vertices."""
    verts = sorted(g.vertex_set, key=repr)
    for k in range(1, max_k + 1):
        for assignment in product(range(1, k + 1), repeat=len(verts)):
            colors = dict(zip(verts, assignment))
            if brute_force_proper(g, colors):
                return k
    raise AssertionError(f"no coloring with up to {max_k} colors")


def edge_disjoint_r_families(n: int, r: int) -> list:
    """All families of pairwise edge-disjoint r-subsets of {1..n}, as sorted
    tuples of sorted tuples (the empty family included)."""
    subsets = list(combinations(range(1, n + 1), r))
    edge_sets = [frozenset(combinations(s, 2)) for s in subsets]
    families = []
    for size in range(len(subsets) + 1):
        for picks in combinations(range(len(subsets)), size):
            union = set()
            ok = True
            for p in picks:
                if union & edge_sets[p]:
                    ok = False
                    break
                union |= edge_sets[p]
            if ok:
                families.append(tuple(subsets[p] for p in picks))
    return families


def family_to_clique_list(n: int, family) -> list:
    """Complete an edge-disjoint r-clique family to a decomposition of K_n
    by filling the remaining edges with 2-cliques."""
    used = set()
    for c in family:
        used.update(combinations(c, 2))
    cliques = list(family)
    cliques.extend(
        e for e in combinations(range(1, n + 1), 2) if e not in used
    )
    return cliques


# lines of the unique triple system on 7 points, 1-based
FANO_TRIANGLES = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
)
