"""Benchmark the enumeration kernel: compiled extension vs numpy fallback.

Both backends compute the exact weight distribution of a random [n, k] code;
results are cross-checked before timing.  Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import random
import time

import numpy as np

from castleqec import _kernels_py
from castleqec.fields import GF
from castleqec.kernels import scalar_multiple_rows

try:
    from castleqec import _accel
except ImportError:
    _accel = None

WORKLOADS = (
    # (q, k, n): q^k words per call
    (2, 16, 64),
    (4, 9, 32),
    (8, 6, 64),
    (9, 6, 27),
    (16, 5, 32),
)


def random_matrix(rng, q, k, n):
    return np.array([[rng.randrange(q) for _ in range(n)] for _ in range(k)], dtype=np.uint16)


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="repetitions per timing (best counts)")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    backends = [("python", _kernels_py.weight_distribution)]
    if _accel is not None:
        backends.insert(0, ("compiled", _accel.weight_distribution))
    else:
        print("compiled extension not built; timing the fallback only\n")

    rng = random.Random(args.seed)
    header = f"{'field':>6} {'k':>3} {'n':>3} {'words':>9}"
    for name, _ in backends:
        header += f" {name + ' (s)':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for q, k, n, in WORKLOADS:
        F = GF(q)
        scalar_rows = scalar_multiple_rows(F, random_matrix(rng, q, k, n))
        results = [np.asarray(fn(scalar_rows, F.add_table, q)) for _, fn in backends]
        for other in results[1:]:
            assert (results[0] == other).all(), "backends disagree"
        line = f"{f'GF({q})':>6} {k:>3} {n:>3} {q ** k:>9}"
        times = []
        for _, fn in backends:
            t = best_of(lambda fn=fn: fn(scalar_rows, F.add_table, q), args.repeats)
            times.append(t)
            line += f" {t:>14.4f}"
        if len(times) == 2:
            line += f" {times[1] / times[0]:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
