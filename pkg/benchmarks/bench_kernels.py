"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times local_smith on cocycle-sized systems and bsgs on prime moduli,
checking that both backends return the same values.
"""

import argparse
import random
import sys
import timeit

from chevbass import _pykernels as py
from chevbass import kernels


def smith_cases(rng):
    cases = []
    for p, t, size in ((2, 6, 6), (3, 4, 8), (5, 3, 10), (163, 1, 12), (3, 8, 16)):
        pm = p**t
        rows = [[rng.randrange(pm) for _ in range(size)] for _ in range(2 * size)]
        cases.append((f"local_smith {2 * size}x{size} mod {p}^{t}", (rows, size, p, t)))
    return cases


def bsgs_cases(rng):
    cases = []
    for q in (10007, 1000003, 2147483629):
        g = 5
        cases.append((f"bsgs mod {q}", (g, pow(g, rng.randrange(q - 1), q), q, q - 1)))
    return cases


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled extension not built; nothing to compare")
        return 1
    c = kernels.compiled
    rng = random.Random(0)
    print(f"{'kernel':<34}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for fn_name, cases in (("local_smith", smith_cases(rng)), ("bsgs", bsgs_cases(rng))):
        fp, fc = getattr(py, fn_name), getattr(c, fn_name)
        for label, a in cases:
            if fp(*a) != fc(*a):
                print(f"MISMATCH {label}")
                return 1
            tp = min(timeit.repeat(lambda: fp(*a), number=1, repeat=args.repeat)) * 1e3
            tc = min(timeit.repeat(lambda: fc(*a), number=1, repeat=args.repeat)) * 1e3
            print(f"{label:<34}{tp:>12.3f}{tc:>12.3f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
