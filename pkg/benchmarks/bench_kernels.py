"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Workloads mirror the hot paths: Littlewood-Richardson products of
vertically expanded diagrams (the vanishing sweep) and dominantization of
many random weights (every Borel-Bott-Weil call).
"""

import argparse
import random
import timeit

from bbwspin import _pykernels
from bbwspin.diagrams import enumerate_diagrams, expand_vertical

try:
    from bbwspin import _ckernels
except ImportError:
    _ckernels = None


def lr_workload(N, k):
    gap = N - 2 * k
    square = [expand_vertical(d, gap).rows for d in enumerate_diagrams(k, k)]
    pairs = [(a, b) for a in square for b in square if a <= b]
    return pairs, N - k


def sort_workload(count, n, seed=0):
    rng = random.Random(seed)
    return [tuple(rng.randint(-30, 30) for _ in range(n)) for _ in range(count)]


def run_lr(impl, pairs, rows):
    for a, b in pairs:
        impl.lr_coefficients(a, b, rows)


def run_sort(impl, weights):
    for w in weights:
        impl.signed_sort(w, 2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    cases = []
    for N, k in ((10, 3), (12, 3), (12, 4)):
        pairs, rows = lr_workload(N, k)
        cases.append((f"lr N={N} k={k} ({len(pairs)} products)", lambda i, p=pairs, r=rows: run_lr(i, p, r)))
    weights = sort_workload(20000, 6)
    cases.append(("signed_sort 20000 D6 weights", lambda i: run_sort(i, weights)))

    print(f"{'workload':40s} " + " ".join(f"{name:>10s}" for name, _ in backends) + "   speedup")
    for label, fn in cases:
        times = [min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)) for _, impl in backends]
        speedup = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 else ""
        print(f"{label:40s} " + " ".join(f"{t:9.4f}s" for t in times) + f"  {speedup}")


if __name__ == "__main__":
    main()
