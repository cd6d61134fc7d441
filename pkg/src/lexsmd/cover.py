"""Exact vertex cover, independence and clique numbers.

One branch-and-bound engine does all three: independence number by Gallai
(``beta = n - alpha``) and clique number as the independence number of the
complement.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _bits, complement


@dataclass(frozen=True)
class CoverResult:
    size: int
    witness: tuple[int, ...]


def _components(rows: tuple[int, ...], alive: int) -> list[int]:
    comps = []
    while alive:
        seed = alive & -alive
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= rows[v]
            frontier = grow & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def _reduce(rows: tuple[int, ...], alive: int) -> tuple[int, int]:
    """Drop degree-0 vertices, take the neighbour of every degree-1 vertex."""
    forced = 0
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if not alive >> v & 1:
                continue
            nb = rows[v] & alive
            if nb == 0:
                alive &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                forced |= nb
                alive &= ~(nb | (1 << v))
                changed = True
    return forced, alive


def _greedy_cover(rows: tuple[int, ...], alive: int) -> int:
    cover = 0
    while True:
        best_v, best_d = -1, 0
        for v in _bits(alive):
            d = (rows[v] & alive).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_v < 0:
            return cover
        cover |= 1 << best_v
        alive &= ~(1 << best_v)


def _lower_bound(rows: tuple[int, ...], alive: int) -> int:
    # a maximal matching needs one cover vertex per edge
    free = alive
    matching = 0
    for v in _bits(alive):
        if free >> v & 1:
            nb = rows[v] & free
            if nb:
                free &= ~((nb & -nb) | (1 << v))
                matching += 1
    # an independent set meets every clique of a partition at most once
    cliques: list[int] = []
    for v in _bits(alive):
        row = rows[v]
        for i, c in enumerate(cliques):
            if c & row == c:
                cliques[i] = c | (1 << v)
                break
        else:
            cliques.append(1 << v)
    return max(matching, alive.bit_count() - len(cliques))


def _min_cover(rows: tuple[int, ...], alive: int, budget: int) -> int | None:
    """Minimum cover of the subgraph on ``alive`` if it has fewer than
    ``budget`` vertices, else None."""
    forced, alive = _reduce(rows, alive)
    k = forced.bit_count()
    if k >= budget:
        return None
    if alive == 0:
        return forced
    if k + _lower_bound(rows, alive) >= budget:
        return None

    comps = _components(rows, alive)
    if len(comps) > 1:
        total = forced
        for comp in comps:
            part = _min_cover(rows, comp, _greedy_cover(rows, comp).bit_count() + 1)
            total |= part
        return total if total.bit_count() < budget else None

    pick, pick_d = -1, -1
    for v in _bits(alive):
        d = (rows[v] & alive).bit_count()
        if d > pick_d:
            pick, pick_d = v, d
    nb = rows[pick] & alive
    best = None
    limit = budget - k
    # pick in the cover
    sub = _min_cover(rows, alive & ~(1 << pick), limit - 1)
    if sub is not None:
        best = sub | (1 << pick)
        limit = best.bit_count()
    # pick out: all its neighbours in
    sub = _min_cover(rows, alive & ~(nb | (1 << pick)), limit - nb.bit_count())
    if sub is not None:
        best = sub | nb
    return None if best is None else best | forced


def vertex_cover(g: Graph) -> CoverResult:
    alive = sum(1 << v for v in range(g.n) if g.rows[v])
    greedy = _greedy_cover(g.rows, alive)
    cover = _min_cover(g.rows, alive, greedy.bit_count() + 1)
    return CoverResult(cover.bit_count(), tuple(_bits(cover)))


def maximum_independent_set(g: Graph) -> tuple[int, ...]:
    cover = set(vertex_cover(g).witness)
    return tuple(v for v in range(g.n) if v not in cover)


def independence_number(g: Graph) -> int:
    return g.n - vertex_cover(g).size


def maximum_clique(g: Graph) -> tuple[int, ...]:
    return maximum_independent_set(complement(g))


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))
