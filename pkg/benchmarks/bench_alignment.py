"""Benchmark the compiled alignment kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_alignment.py [--pairs N]
"""
import argparse
import random
import time

from speech_clarity.align import _fallback

try:
    from speech_clarity.align import _core
except ImportError:
    _core = None


def make_pairs(n_pairs, length, alphabet, rng):
    return [
        ([rng.randint(0, alphabet - 1) for _ in range(length)],
         [rng.randint(0, alphabet - 1) for _ in range(length)])
        for _ in range(n_pairs)
    ]


def bench(kernel, pairs):
    start = time.perf_counter()
    for ref, hyp in pairs:
        kernel(ref, hyp)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--pairs", type=int, default=2000)
    args = parser.parse_args()

    rng = random.Random(0)
    print(f"{'len':>5} {'python':>10} {'cython':>10} {'speedup':>8}")
    for length in (10, 50, 200, 500):
        pairs = make_pairs(args.pairs, length, 30, rng)
        t_py = bench(_fallback.align_ids, pairs)
        if _core is None:
            print(f"{length:>5} {t_py:>9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_cy = bench(_core.align_ids, pairs)
        for ref, hyp in pairs[:50]:
            assert _core.align_ids(ref, hyp) == _fallback.align_ids(ref, hyp)
        print(f"{length:>5} {t_py:>9.3f}s {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
