"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from thinpos import _pykernels

try:
    from thinpos import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    widths = [sorted((rng.randint(0, 99) for _ in range(12)), reverse=True) for _ in range(2000)]
    cmp_pairs = list(zip(widths, widths[1:]))

    def matching(n):
        pts = list(range(n))
        rng.shuffle(pts)
        p = [0] * n
        for i in range(0, n, 2):
            p[pts[i]], p[pts[i + 1]] = pts[i + 1], pts[i]
        return p
    match_pairs = [(matching(200), matching(200)) for _ in range(200)]
    mats = [[[rng.randint(-3, 3) for _ in range(6)] for _ in range(6)] for _ in range(200)]
    return {
        "padded_compare (2000 pairs)": lambda k: [k.padded_compare(a, b) for a, b in cmp_pairs],
        "union_components (200 x 2b=200)": lambda k: [k.union_components(a, b) for a, b in match_pairs],
        "smith_decomp (200 6x6)": lambda k: [_safe_snf(k, a) for a in mats],
    }


def _safe_snf(k, a):
    try:
        return k.smith_decomp(a, 6, 6)
    except OverflowError:
        return _pykernels.smith_decomp(a, 6, 6)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")
    rng = random.Random(0)
    print(f"{'kernel':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in workloads(rng).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:34} {py:10.2f} {'-':>10} {'-':>8}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:34} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
