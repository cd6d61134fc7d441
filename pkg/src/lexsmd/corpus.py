"""Exhaustive and seeded-random graph corpora for the verification sweeps."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .constructions import tree_from_pruefer
from .graph import Graph, build_graph, canonical_form

EXHAUSTIVE_LIMIT = 7


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    reps: dict = {}
    for base in _classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.rows) + [nbrs]
            for v in range(n - 1):
                if nbrs >> v & 1:
                    rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            key = canonical_form(g)
            if key not in reps:
                reps[key] = Graph(n, key[1])
    return tuple(reps[k] for k in sorted(reps))


def all_graphs(n: int) -> tuple[Graph, ...]:
    """One canonically labelled representative per isomorphism class on n vertices."""
    if not 0 <= n <= EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration supports 0 <= n <= {EXHAUSTIVE_LIMIT}")
    return _classes(n)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())


def graphs_up_to(max_n: int, *, min_n: int = 1, connected: bool = False) -> list[Graph]:
    pick = connected_graphs if connected else all_graphs
    return [g for n in range(min_n, max_n + 1) for g in pick(n)]


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, k=1)
    us, vs = np.nonzero(upper)
    return build_graph(n, zip(us.tolist(), vs.tolist()))


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.3) -> Graph:
    """Random spanning tree (uniform Prüfer sequence) plus G(n, p) extra edges."""
    if n == 1:
        return build_graph(1, [])
    tree = tree_from_pruefer(rng.integers(0, n, size=n - 2).tolist())
    extra = random_graph(rng, n, p)
    return build_graph(n, tree.edges + extra.edges)
