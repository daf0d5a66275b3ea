"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel call on both backends and checks that they
return identical results.
"""

import argparse
import sys
import time

from leakyforce import grid, hypercube, random_regular
from leakyforce.kernels import available_backends
from leakyforce.solver import compute_l_forcing_number


def _best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    g = grid(6, 6)
    adj = g.masks
    yield "closure grid 6x6", lambda k: k.closure_mask(adj, (1 << 6) - 1, 1 << 14)
    q = hypercube(5)
    # every single-leak placement against half the cube
    half = (1 << 16) - 1
    yield "leak scan Q5 l=1", lambda k: k.failing_leak_sets(q.masks, half, 1, 0, q.n, q.n)
    q4 = hypercube(4)
    yield "leak scan Q4 l=3", lambda k: k.failing_leak_sets(q4.masks, 0x3FF, 3, 0, q4.n, 10 ** 6)
    yield "minimize grid 6x6", lambda k: k.minimize_mask(adj, g.full_mask & ~0x3F, 0)
    # a fort pool taken from a real run, solved from scratch
    pool = [f.members for f in compute_l_forcing_number(random_regular(16, 3, seed=1), 1).fort_pool]
    masks = [sum(1 << v for v in f) for f in pool]
    yield f"multicover {len(masks)} forts", lambda k: k.multicover(16, masks, 1, 0, 0)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
        return 1
    py, cy = backends["python"], backends["cython"]
    print(f"{'workload':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        tp, rp = _best_of(lambda: fn(py), args.repeat)
        tc, rc = _best_of(lambda: fn(cy), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:28s} {tp * 1e3:10.3f} {tc * 1e3:10.3f} {tp / max(tc, 1e-9):8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
