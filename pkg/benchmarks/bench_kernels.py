"""Compare the compiled and pure-Python scanning kernels.

Usage: python3 benchmarks/bench_kernels.py [--block N] [--repeat R]

Each backend scans the same blocks of a few lines; the script checks that
both return identical prime indices and prints the best time per block.
"""
from __future__ import annotations

import argparse
import timeit

from gaussline import GaussianLine
from gaussline.bertrand import DEFAULT_PRIME_BOUND, Walk, exempt_range, sieve_progressions
from gaussline.kernels import backends

LINES = ["1;i", "2;1+2i", "1;3+10i", "3+i;2+5i"]


def _setup(text, start, prime_bound):
    walk = Walk.of(GaussianLine.parse(text))
    qs, rs = sieve_progressions(walk, prime_bound)
    elo, ehi = exempt_range(walk, prime_bound)
    x0, y0 = walk.coords(start)
    return (x0, y0, walk.c, walk.d), qs, rs, elo, ehi


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--block", type=int, default=32768)
    ap.add_argument("--start", type=int, default=1000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--prime-bound", type=int, default=DEFAULT_PRIME_BOUND)
    args = ap.parse_args(argv)

    mods = backends()
    lo, hi = args.start, args.start + args.block
    print(f"block [{lo}, {hi}), prime bound {args.prime_bound}, backends {sorted(mods)}")
    print(f"{'line':<12}{'primes':>8}" + "".join(f"{name + ' (ms)':>16}" for name in mods) + (f"{'speedup':>10}" if "cython" in mods else ""))
    for text in LINES:
        (x0, y0, c, d), qs, rs, elo, ehi = _setup(text, lo, args.prime_bound)
        results, times = {}, {}
        for name, mod in mods.items():
            call = lambda: mod.scan_block(x0, y0, c, d, lo, hi, qs, rs, elo, ehi)  # noqa: E731
            results[name] = list(call())
            times[name] = min(timeit.repeat(call, number=1, repeat=args.repeat))
        first = next(iter(results.values()))
        if any(r != first for r in results.values()):
            raise SystemExit(f"backends disagree on {text}")
        row = f"{text:<12}{len(first):>8}" + "".join(f"{1e3 * t:>16.2f}" for t in times.values())
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
