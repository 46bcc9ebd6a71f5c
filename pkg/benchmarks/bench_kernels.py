#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--draws N] [--words N] [--types N]

Times the hot paths (syllable cluster counting, mixture pmf evaluation,
regression sums, length sampling) on both backends and prints the speedup.
Runs with whatever backends are importable; if the compiled extension is
missing, only the pure timings are shown.
"""

import argparse
import time

import numpy as np

from wordlength import _kernels_py

try:
    from wordlength import _kernels
except ImportError:
    _kernels = None


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def make_words(n):
    rng = np.random.default_rng(12)
    vowels = "aeiouy"
    consonants = "bcdfghklmnprstvwz"
    words = []
    for _ in range(n):
        k = rng.integers(2, 14)
        chars = [
            (vowels if i % 2 else consonants)[rng.integers(0, 6 if i % 2 else 17)]
            for i in range(k)
        ]
        words.append("".join(chars))
    return words


def bench_count_clusters(kernels, words):
    def run():
        for w in words:
            kernels.count_clusters(w, "aeiouy")
    return run


def bench_mixture_pmf(kernels):
    def run():
        for _ in range(200):
            for k in range(1, 31):
                kernels.mixture_pmf_kernel(k, 0.0, 1.4284, 0.012376)
    return run


def bench_wls(kernels, w, length, t):
    def run():
        kernels.weighted_mean(w, length)
        kernels.wls_sums(w, length, t, 1.705249)
    return run


def bench_sampler(kernels, draws):
    def run():
        kernels.sample_length_histogram(draws, 1.705249, 0.982100, 29)
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--draws", type=int, default=1_000_000,
                        help="sampler draws (default 1e6)")
    parser.add_argument("--words", type=int, default=500_000,
                        help="words for cluster counting (default 5e5)")
    parser.add_argument("--types", type=int, default=1_000_000,
                        help="entries for the regression sums (default 1e6)")
    args = parser.parse_args()

    words = make_words(args.words)
    rng = np.random.default_rng(5)
    w = rng.uniform(1, 500, args.types).round()
    length = rng.integers(1, 7, args.types).astype(np.float64)
    t = np.sort(rng.uniform(1e-6, 1 - 1e-6, args.types))

    cases = [
        (f"count_clusters x{args.words}", lambda k: bench_count_clusters(k, words)),
        ("mixture_pmf 200x30", bench_mixture_pmf),
        (f"regression sums x{args.types}", lambda k: bench_wls(k, w, length, t)),
        (f"sample_length_histogram x{args.draws}",
         lambda k: bench_sampler(k, args.draws)),
    ]

    backends = [("pure", _kernels_py)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))
    else:
        print("note: compiled extension not available; timing pure only\n")

    name_w = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{name_w}}  " + "".join(
        f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for case_name, make in cases:
        times = [timeit(make(kernels)) for _, kernels in backends]
        row = f"{case_name:<{name_w}}  " + "".join(
            f"{t_:>11.3f}s" for t_ in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)

    if len(backends) == 2:
        sample = _kernels.sample_length_histogram(10000, 2.0, 1.0, 7)
        assert sample == _kernels_py.sample_length_histogram(10000, 2.0, 1.0, 7)
        print("\nbackends agree bit-for-bit on a 10k-draw spot check")


if __name__ == "__main__":
    main()
