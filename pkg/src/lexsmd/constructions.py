"""Graph products, join, corona and the named families.

Vertex numbering is part of the contract:

* lexicographic / Cartesian product: ``(a, x) -> a * |V(H)| + x``;
* join ``G + H``: G first, then H shifted by ``|V(G)|``;
* corona ``G ⊙ H``: G first, then copy ``i`` of H on
  ``n + i*|V(H)| .. n + (i+1)*|V(H)| - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Graph, GraphError, _bits, build_graph, disjoint_union


class ProductVertex(NamedTuple):
    a: int
    x: int

    def flat(self, nprime: int) -> int:
        return self.a * nprime + self.x

    @classmethod
    def from_flat(cls, index: int, nprime: int) -> ProductVertex:
        return cls(*divmod(index, nprime))


def _spread(row: int, width: int) -> int:
    """Bit set ``{a*width + x : a in row, x < width}``."""
    block = (1 << width) - 1
    out = 0
    for a in _bits(row):
        out |= block << (a * width)
    return out


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    if g.n == 0 or h.n == 0:
        raise GraphError("lexicographic product needs non-empty factors")
    m = h.n
    rows = []
    for a in range(g.n):
        outer = _spread(g.rows[a], m)
        for x in range(m):
            rows.append(outer | (h.rows[x] << (a * m)))
    return Graph(g.n * m, tuple(rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    m = h.n
    rows = []
    for a in range(g.n):
        for x in range(m):
            r = h.rows[x] << (a * m)
            for c in _bits(g.rows[a]):
                r |= 1 << (c * m + x)
            rows.append(r)
    return Graph(g.n * m, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n
    left = (1 << n) - 1
    right = ((1 << h.n) - 1) << n
    rows = [r | right for r in g.rows] + [(r << n) | left for r in h.rows]
    return Graph(n + h.n, tuple(rows))


def corona(g: Graph, h: Graph) -> Graph:
    if g.n == 0:
        raise GraphError("corona needs a non-empty first factor")
    n, m = g.n, h.n
    block = (1 << m) - 1
    rows = [g.rows[i] | (block << (n + i * m)) for i in range(n)]
    for i in range(n):
        base = n + i * m
        for x in range(m):
            rows.append((h.rows[x] << base) | (1 << i))
    return Graph(n * (1 + m), tuple(rows))


# --------------------------------------------------------------------------
# named families
# --------------------------------------------------------------------------

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_multipartite",
    "grid",
    "star",
    "tree_from_pruefer",
)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return build_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]]
    )


def grid(r: int, t: int) -> Graph:
    return cartesian_product(path(r), path(t))


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def tree_from_pruefer(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    for x in seq:
        if not 0 <= x < n:
            raise GraphError(f"Prüfer entry {x} out of range for a tree on {n} vertices")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return build_graph(n, edges)


def generate_family(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam not in FAMILIES:
        raise GraphError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    if fam == "tree_from_pruefer":
        return tree_from_pruefer(p)
    if not p:
        raise GraphError(f"family {fam!r} needs at least one size parameter")
    for x in p:
        if x < 1:
            raise GraphError(f"family {fam!r}: size parameter {x} must be >= 1")
    single = {"path": path, "cycle": cycle, "complete": complete, "empty": empty, "star": star}
    if fam in single:
        if len(p) != 1:
            raise GraphError(f"family {fam!r} takes one size, got {len(p)}")
        return single[fam](p[0])
    if fam == "grid":
        if len(p) != 2:
            raise GraphError(f"family 'grid' takes two sizes r,t, got {len(p)}")
        return grid(*p)
    return complete_multipartite(p)


def union(*gs: Graph) -> Graph:
    return disjoint_union(gs)
