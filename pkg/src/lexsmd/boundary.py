"""Mutual maximal distance, the boundary, G_SR, G*, and the TF variants.

Cross-component pairs need no special casing: ``UNREACHABLE`` compares
larger than every hop count, so such pairs come out mutually maximally
distant and at distance ``>= 2``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import DistanceMatrix, Graph, GraphError, remove_isolated


@dataclass(frozen=True)
class MmdReport:
    pairs: tuple[tuple[int, int], ...]
    boundary: tuple[int, ...]


def is_maximally_distant(g: Graph, dm: DistanceMatrix, u: int, v: int) -> bool:
    """True iff every neighbour w of u has ``d(v, w) <= d(u, v)``."""
    duv = dm.hops[u, v]
    return all(dm.hops[v, w] <= duv for w in g.neighbors(u))


def mmd_matrix(g: Graph) -> np.ndarray:
    """Boolean n×n matrix of mutually maximally distant pairs (diagonal False)."""
    md = _kernels.maximally_distant(
        np.ascontiguousarray(g.adjacency), np.ascontiguousarray(g.distances.hops)
    )
    mmd = md & md.T
    np.fill_diagonal(mmd, False)
    return mmd


def mmd_report(g: Graph) -> MmdReport:
    mmd = mmd_matrix(g)
    us, vs = np.nonzero(np.triu(mmd, k=1))
    pairs = tuple(zip(us.tolist(), vs.tolist()))
    boundary = tuple(np.flatnonzero(mmd.any(axis=1)).tolist())
    return MmdReport(pairs, boundary)


def _graph_on_pairs(n: int, keep: np.ndarray) -> Graph:
    rows = [0] * n
    for u, v in zip(*np.nonzero(keep)):
        rows[int(u)] |= 1 << int(v)
    return Graph(n, tuple(rows))


def strong_resolving_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """G_SR on the boundary, plus the map from its vertices back into g."""
    full = _graph_on_pairs(g.n, mmd_matrix(g))
    return remove_isolated(full)


def star_transform(g: Graph) -> Graph:
    """G*: adjacent iff distance >= 2 (infinite counts) or true twins."""
    far = g.distances.hops >= 2
    closed = np.array([g.closed_row(v) for v in range(g.n)], dtype=object)
    twins = (closed[:, None] == closed[None, :]).astype(bool)
    keep = (far | twins) & ~np.eye(g.n, dtype=bool)
    return _graph_on_pairs(g.n, keep)


def star_minus(g: Graph) -> Graph:
    return remove_isolated(star_transform(g))[0]


def _tf_matrix(g: Graph) -> np.ndarray:
    if g.is_complete():
        raise GraphError("TF-boundary is only defined for non-complete graphs")
    closed = np.array([g.closed_row(v) for v in range(g.n)], dtype=object)
    not_twins = (closed[:, None] != closed[None, :]).astype(bool)
    return mmd_matrix(g) & not_twins


def tf_boundary(g: Graph) -> tuple[int, ...]:
    return tuple(np.flatnonzero(_tf_matrix(g).any(axis=1)).tolist())


def strong_resolving_tf_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """G_SRS on the TF-boundary, plus the map back into g."""
    return remove_isolated(_graph_on_pairs(g.n, _tf_matrix(g)))
