"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--sizes 16 64 256] [--repeat 5]

Both backends are imported in the same process; the env flag only picks the
default, so this script runs with it set or unset.
"""
import argparse
import time

import numpy as np

from lexsmd import _kernels
from lexsmd.constructions import cycle
from lexsmd.corpus import random_connected_graph


def best_of(fn, args, repeat):
    fn(*args)  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 256])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    backends = sorted(_kernels.BACKENDS)
    print(f"{'kernel':<20}{'n':>6}" + "".join(f"{b:>14}" for b in backends) + f"{'numba gain':>12}")
    for n in args.sizes:
        g = random_connected_graph(rng, n, 4.0 / n)
        adj = np.ascontiguousarray(g.adjacency)
        dist = _kernels.BACKENDS["numpy"]["bfs_distances"](adj)
        cases = [("bfs_distances", (adj,)), ("maximally_distant", (adj, dist))]
        if n <= _kernels.MAX_MASK_VERTICES:
            cases.append(("resolver_masks", (dist,)))
        for name, call_args in cases:
            times = [best_of(_kernels.BACKENDS[b][name], call_args, args.repeat) for b in backends]
            row = f"{name:<20}{n:>6}" + "".join(f"{t * 1e3:>12.3f}ms" for t in times)
            if len(times) == 2:
                row += f"{times[1] / times[0]:>11.1f}x"
            print(row)

    # subset search on a cycle: dim_s(C_n) = ceil(n/2), so the search is long
    for n in (10, 12, 14):
        dist = _kernels.BACKENDS["numpy"]["bfs_distances"](np.ascontiguousarray(cycle(n).adjacency))
        masks = _kernels.resolver_masks_numpy(dist)
        times = [best_of(_kernels.BACKENDS[b]["first_generator"], (masks, n), 1) for b in backends]
        row = f"{'first_generator':<20}{n:>6}" + "".join(f"{t * 1e3:>12.3f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
