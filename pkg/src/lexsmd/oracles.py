"""Slow, obviously-correct reference computations.

Nothing here shares code with the fast paths it is used to check: distances
come from Floyd-Warshall instead of BFS, covers and independent sets from
subset enumeration instead of branch-and-bound, and strong resolution from
explicit shortest-path enumeration instead of the distance identity.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

from .graph import Graph

ENUMERATION_LIMIT = 16


def floyd_warshall(g: Graph) -> np.ndarray:
    d = np.full((g.n, g.n), np.inf)
    np.fill_diagonal(d, 0.0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1.0
    for k in range(g.n):
        d = np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :])
    return d


def _subset_masks(n: int, k: int) -> np.ndarray:
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    combos = np.array(list(itertools.combinations(range(n), k)), dtype=np.int64)
    return np.bitwise_or.reduce(np.left_shift(1, combos), axis=1)


def _edge_masks(g: Graph) -> np.ndarray:
    return np.array([(1 << u) | (1 << v) for u, v in g.edges], dtype=np.int64)


def min_vertex_cover_size(g: Graph) -> int:
    if g.n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration oracle limited to n <= {ENUMERATION_LIMIT}")
    edges = _edge_masks(g)
    if edges.size == 0:
        return 0
    for k in range(g.n + 1):
        masks = _subset_masks(g.n, k)
        if np.any(np.all((masks[:, None] & edges[None, :]) != 0, axis=1)):
            return k
    raise AssertionError("unreachable: the full vertex set is a cover")


def max_independent_set_size(g: Graph) -> int:
    if g.n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration oracle limited to n <= {ENUMERATION_LIMIT}")
    edges = _edge_masks(g)
    if edges.size == 0:
        return g.n
    for k in range(g.n, -1, -1):
        masks = _subset_masks(g.n, k)
        # independent: no edge has both endpoints inside
        if np.any(np.all((masks[:, None] & edges[None, :]) != edges[None, :], axis=1)):
            return k
    return 0


def max_clique_size(g: Graph) -> int:
    best = min(g.n, 1)
    for k in range(2, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def shortest_paths(g: Graph, src: int, dst: int) -> list[tuple[int, ...]]:
    """All shortest src-dst paths, by layered enumeration."""
    if src == dst:
        return [(src,)]
    layers = [{src}]
    seen = {src}
    while dst not in layers[-1]:
        nxt = {w for v in layers[-1] for w in g.neighbors(v)} - seen
        if not nxt:
            return []
        seen |= nxt
        layers.append(nxt)
    paths = [(dst,)]
    for depth in range(len(layers) - 2, -1, -1):
        paths = [(v,) + p for p in paths for v in g.neighbors(p[0]) if v in layers[depth]]
    return paths


def resolves_by_paths(g: Graph, w: int, u: int, v: int) -> bool:
    """Some shortest w-u path contains v, or some shortest w-v path contains u."""
    return any(v in p for p in shortest_paths(g, w, u)) or any(
        u in p for p in shortest_paths(g, w, v)
    )


def smd_by_paths(g: Graph) -> int:
    """Strong metric dimension straight from the path definition (tiny graphs)."""
    pairs = list(itertools.combinations(range(g.n), 2))
    resolvers = [
        {w for w in range(g.n) if resolves_by_paths(g, w, u, v)} for u, v in pairs
    ]
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            chosen = set(s)
            if all(r & chosen for r in resolvers):
                return k
    return math.inf
