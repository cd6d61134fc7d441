"""Immutable simple graphs, hop distances, twins and small-graph isomorphism."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

INFINITY = math.inf
"""Distance between vertices in different components."""

ISOMORPHISM_LIMIT = 16


class GraphError(ValueError):
    """Malformed graph input (bad vertex, self-loop, size over a limit)."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood of v as a bit set.  Build instances with
    :func:`build_graph` (or the other constructors); the raw initializer does
    not validate.
    """

    n: int
    rows: tuple[int, ...] = field(repr=False)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def closed_row(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    @cached_property
    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def is_connected(self) -> bool:
        return self.n <= 1 or self.distances.diameter != INFINITY

    def has_true_twins(self) -> bool:
        closed = [self.closed_row(v) for v in range(self.n)]
        return len(set(closed)) < self.n

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts.  Cross-component entries read as ``INFINITY``."""

    n: int
    hops: np.ndarray = field(repr=False, compare=False)

    def __getitem__(self, pair: tuple[int, int]) -> float | int:
        d = int(self.hops[pair])
        return INFINITY if d >= _kernels.UNREACHABLE else d

    @cached_property
    def diameter(self) -> float | int:
        if self.n == 0:
            return 0
        d = int(self.hops.max())
        return INFINITY if d >= _kernels.UNREACHABLE else d

    def as_lists(self) -> list[list[float | int]]:
        return [[self[u, v] for v in range(self.n)] for u in range(self.n)]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    hops = _kernels.bfs_distances(np.ascontiguousarray(g.adjacency))
    hops.setflags(write=False)
    return DistanceMatrix(g.n, hops)


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise GraphError(f"true-twin test needs two distinct vertices, got {u} twice")
    return g.closed_row(u) == g.closed_row(v)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``s`` with vertices renumbered in ascending order.

    Returns the graph and the map from new index to original vertex.
    """
    keep = tuple(sorted(set(s)))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(sum(1 << pos[w] for w in _bits(g.rows[v]) if w in pos))
    return Graph(len(keep), tuple(rows)), keep


def remove_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, (v for v in range(g.n) if g.rows[v]))


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    rows: list[int] = []
    for h in gs:
        shift = len(rows)
        rows.extend(r << shift for r in h.rows)
    return Graph(len(rows), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for u, v in g.edges:
        a, b = perm[u], perm[v]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


# --------------------------------------------------------------------------
# isomorphism
# --------------------------------------------------------------------------


def _refine(rows: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition.

    New colours are ranks of (old colour, sorted neighbour colours), so the
    result is invariant under relabeling and comparable across graphs that
    are refined together.
    """
    n = len(rows)
    num = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in _bits(rows[v]))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == num:
            return colors
        num = len(rank)


def _match(rows: Sequence[int], n: int, colors: list[int]) -> list[int] | None:
    """Search for a colour-respecting bijection between the two halves of a
    disjoint union (vertices ``0..n-1`` and ``n..2n-1``)."""
    colors = _refine(rows, colors)
    cells: dict[int, tuple[list[int], list[int]]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, ([], []))[v >= n].append(v)
    target = None
    for c in sorted(cells):
        left, right = cells[c]
        if len(left) != len(right):
            return None
        if len(left) > 1 and (target is None or len(left) < len(cells[target][0])):
            target = c
    if target is None:
        mapping = [0] * n
        for left, right in cells.values():
            mapping[left[0]] = right[0] - n
        for v in range(n):
            image = sum(1 << mapping[w] for w in _bits(rows[v]))
            if image != rows[mapping[v] + n] >> n:
                return None
        return mapping
    left, right = cells[target]
    fresh = max(colors) + 1
    for w in right:
        trial = list(colors)
        trial[left[0]] = trial[w] = fresh
        found = _match(rows, n, trial)
        if found is not None:
            return found
    return None


def find_isomorphism(
    g: Graph, h: Graph, limit: int = ISOMORPHISM_LIMIT
) -> list[int] | None:
    """An edge-preserving bijection ``g -> h`` as a list, or None."""
    for x in (g, h):
        if x.n > limit:
            raise GraphError(f"isomorphism test limited to n <= {limit}, got n={x.n}")
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    if g.n == 0:
        return []
    union = disjoint_union([g, h])
    return _match(union.rows, g.n, [0] * union.n)


def is_isomorphic(g: Graph, h: Graph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    return find_isomorphism(g, h, limit) is not None


def canonical_form(g: Graph, limit: int = ISOMORPHISM_LIMIT) -> tuple[int, tuple[int, ...]]:
    """Relabeling-invariant key: equal keys iff isomorphic graphs.

    Individualisation-refinement search keeping the largest adjacency
    certificate.  Only twin swaps are pruned, so graphs with large
    automorphism groups of other kinds still cost exponential time; the
    corpora it serves stay at n <= 7.
    """
    if g.n > limit:
        raise GraphError(f"canonical form limited to n <= {limit}, got n={g.n}")
    best: tuple[int, ...] | None = None

    def walk(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g.rows, colors)
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            counts.setdefault(c, []).append(v)
        target = None
        for c in sorted(counts):
            if len(counts[c]) > 1:
                target = c
                break
        if target is None:
            cert = tuple(relabel(g, colors).rows)
            if best is None or cert > best:
                best = cert
            return
        tried: list[int] = []
        for v in counts[target]:
            # swapping twins inside a cell is an automorphism of the
            # coloured graph, so their subtrees give the same certificates
            if any(g.rows[v] & ~(1 << u) == g.rows[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            # the individualised vertex moves ahead of its old cell
            trial = [2 * c + 1 for c in colors]
            trial[v] = 2 * target
            walk(trial)

    walk(list(g.degrees))
    return g.n, best or ()
