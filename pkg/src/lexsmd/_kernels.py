"""Numeric inner loops: BFS distances, maximal-distance tests, resolver masks
and the brute-force search for the first strong metric generator.

Every kernel exists twice, as plain numpy and as a numba ``@njit`` twin.  The
numba versions are used when numba imports and ``LEXSMD_DISABLE_NUMBA`` is not
set to a truthy value.  Both paths return identical arrays; the test suite
runs them side by side.
"""
from __future__ import annotations

import itertools
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

# Stored in int64 distance arrays for cross-component pairs.  Larger than any
# hop count a graph can have, and comparisons (d >= 2, d <= d') behave as for
# a true infinity.  Never added to anything: callers reject it first.
UNREACHABLE = np.int64(1 << 40)

# Pair masks are int64 bit sets over the resolving vertices.
MAX_MASK_VERTICES = 62


def _numba_disabled() -> bool:
    flag = os.environ.get("LEXSMD_DISABLE_NUMBA", "")
    return flag.strip().lower() in {"1", "true", "yes", "on"}


# --------------------------------------------------------------------------
# numpy implementations
# --------------------------------------------------------------------------


def bfs_distances_numpy(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    if n == 0:
        return dist
    a = adj.astype(np.int32)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(dist, 0)
    step = 0
    while frontier.any():
        step += 1
        nxt = (frontier.astype(np.int32) @ a) > 0
        nxt &= ~reached
        dist[nxt] = step
        reached |= nxt
        frontier = nxt
    return dist


def maximally_distant_numpy(adj: np.ndarray, dist: np.ndarray) -> np.ndarray:
    """``out[u, v]`` is True iff no neighbour of u is farther from v than u."""
    n = adj.shape[0]
    far = np.full((n, n), -1, dtype=np.int64)
    mask = adj.astype(bool)
    for u in range(n):
        if mask[u].any():
            far[u] = dist[mask[u]].max(axis=0)
    return far <= dist


def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu = np.triu_indices(n, k=1)
    return iu[0].astype(np.int64), iu[1].astype(np.int64)


def resolver_masks_numpy(dist: np.ndarray) -> np.ndarray:
    n = dist.shape[0]
    us, vs = _pair_index(n)
    duv = dist[us, vs]
    from_u = dist[:, us]
    from_v = dist[:, vs]
    hit = (from_u == from_v + duv) | (from_v == from_u + duv)
    bits = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    return (hit.astype(np.int64) * bits[:, None]).sum(axis=0).astype(np.int64)


def first_generator_numpy(pair_masks: np.ndarray, n: int) -> int:
    if pair_masks.size == 0:
        return 0
    bits = np.left_shift(np.int64(1), np.arange(n, dtype=np.int64))
    for k in range(1, n + 1):
        combos = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations(range(n), k)),
            dtype=np.int64,
        ).reshape(-1, k)
        masks = np.bitwise_or.reduce(bits[combos], axis=1)
        ok = np.all((masks[:, None] & pair_masks[None, :]) != 0, axis=1)
        if ok.any():
            return int(masks[int(np.argmax(ok))])
    return -1


# --------------------------------------------------------------------------
# numba twins (plain loops, compiled on first call)
# --------------------------------------------------------------------------


def _bfs_distances_loops(adj):
    n = adj.shape[0]
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[s, u]
            for w in range(n):
                if adj[u, w] and dist[s, w] == UNREACHABLE:
                    dist[s, w] = du + 1
                    queue[tail] = w
                    tail += 1
    return dist


def _maximally_distant_loops(adj, dist):
    n = adj.shape[0]
    out = np.ones((n, n), dtype=np.bool_)
    for u in range(n):
        for w in range(n):
            if not adj[u, w]:
                continue
            # row w of dist holds d(w, v) for every v
            for v in range(n):
                if dist[w, v] > dist[u, v]:
                    out[u, v] = False
    return out


def _resolver_masks_loops(dist):
    n = dist.shape[0]
    out = np.zeros(n * (n - 1) // 2, dtype=np.int64)
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            duv = dist[u, v]
            m = np.int64(0)
            for w in range(n):
                if dist[w, u] == dist[w, v] + duv or dist[w, v] == dist[w, u] + duv:
                    m |= np.int64(1) << np.int64(w)
            out[p] = m
            p += 1
    return out


def _first_generator_loops(pair_masks, n):
    if pair_masks.shape[0] == 0:
        return np.int64(0)
    for k in range(1, n + 1):
        idx = np.arange(k)
        while True:
            m = np.int64(0)
            for i in range(k):
                m |= np.int64(1) << np.int64(idx[i])
            ok = True
            for p in range(pair_masks.shape[0]):
                if pair_masks[p] & m == 0:
                    ok = False
                    break
            if ok:
                return m
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return np.int64(-1)


if numba is not None:
    _jit = numba.njit(cache=True, nogil=True)
    bfs_distances_numba = _jit(_bfs_distances_loops)
    maximally_distant_numba = _jit(_maximally_distant_loops)
    resolver_masks_numba = _jit(_resolver_masks_loops)
    _first_generator_jit = _jit(_first_generator_loops)

    def first_generator_numba(pair_masks: np.ndarray, n: int) -> int:
        return int(_first_generator_jit(pair_masks, n))
else:  # pragma: no cover
    bfs_distances_numba = maximally_distant_numba = None
    resolver_masks_numba = first_generator_numba = None


BACKENDS = {
    "numpy": {
        "bfs_distances": bfs_distances_numpy,
        "maximally_distant": maximally_distant_numpy,
        "resolver_masks": resolver_masks_numpy,
        "first_generator": first_generator_numpy,
    },
}
if numba is not None:
    BACKENDS["numba"] = {
        "bfs_distances": bfs_distances_numba,
        "maximally_distant": maximally_distant_numba,
        "resolver_masks": resolver_masks_numba,
        "first_generator": first_generator_numba,
    }

BACKEND = "numba" if numba is not None and not _numba_disabled() else "numpy"

_active = BACKENDS[BACKEND]
bfs_distances = _active["bfs_distances"]
maximally_distant = _active["maximally_distant"]
resolver_masks = _active["resolver_masks"]
first_generator = _active["first_generator"]
