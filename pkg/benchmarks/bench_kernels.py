"""Compiled versus pure-Python polynomial kernels.

Run: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from yangslice import _kernels_py
from yangslice._kernels_py import BITS
from yangslice.rational import Rat

try:
    from yangslice import _kernels
except ImportError:
    _kernels = None


def random_poly(rng, terms, slots, top):
    return {
        sum(rng.randint(0, top) << (BITS * k) for k in range(slots)): Rat(rng.randint(-9, 9), rng.randint(1, 9))
        for _ in range(terms)
    }


def workloads(rng):
    a = random_poly(rng, 60, 4, 3)
    b = random_poly(rng, 60, 4, 3)
    radslot = 3
    radmask = 2 << (BITS * radslot)
    rad = random_poly(rng, 40, 3, 3)
    rad = {k + (rng.randint(0, 1) << (BITS * radslot)): c for k, c in rad.items()}
    shifts = tuple((BITS * k, Rat(rng.randint(-3, 3), 2)) for k in range(4))
    return {
        "poly_mul 60x60 terms": ("poly_mul", (a, b, 0, ())),
        "poly_mul with radical slot": ("poly_mul", (rad, rad, radmask, ((radmask, 2),))),
        "poly_shift 4 slots": ("poly_shift", (a, shifts)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"{'workload':<30}{'pure ms':>10}{'compiled ms':>13}{'speedup':>9}")
    for name, (fn, call_args) in workloads(rng).items():
        pure = getattr(_kernels_py, fn)
        t_pure = min(timeit.repeat(lambda: pure(*call_args), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:<30}{t_pure:>10.3f}{'-':>13}{'-':>9}")
            continue
        fast = getattr(_kernels, fn)
        # same answer from both backends, or the timing is meaningless
        assert fast(*call_args) == pure(*call_args), name
        t_fast = min(timeit.repeat(lambda: fast(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<30}{t_pure:>10.3f}{t_fast:>13.3f}{t_pure / t_fast:>8.2f}x")


if __name__ == "__main__":
    main()
