"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from intervalnest import _kernels_py
from intervalnest.digraph import complete_digraph, random_digraph

try:
    from intervalnest import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def cases():
    yield "first_nest_ordering x200 random n=7", "first", [
        random_digraph(7, 0.5, seed=s, force_reflexive=True) for s in range(200)]
    yield "first_nest_ordering x50 random n=8", "first", [
        random_digraph(8, 0.3, seed=s, force_reflexive=True) for s in range(50)]
    yield "count_nest_orderings complete n=7", "count", [complete_digraph(7)]


def timed(impl, kind, ds, repeat):
    fn = impl.first_nest_ordering if kind == "first" else impl.count_nest_orderings
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        results = [fn(d.adjacency, d.n) for d in ds]
        best = min(best, time.perf_counter() - t)
    return best, results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels_c is None:
        print("compiled extension not available; only the Python kernel can be timed")
    print("%-40s %10s %10s %8s" % ("case", "python s", "cython s", "speedup"))
    for name, kind, ds in cases():
        tp, rp = timed(_kernels_py, kind, ds, args.repeat)
        if _kernels_c is None:
            print("%-40s %10.4f %10s %8s" % (name, tp, "-", "-"))
            continue
        tc, rc = timed(_kernels_c, kind, ds, args.repeat)
        assert rp == rc, "backends disagree on %s" % name
        print("%-40s %10.4f %10.4f %7.0fx" % (name, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
