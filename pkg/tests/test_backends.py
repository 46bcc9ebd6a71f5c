"""Kernel backend parity: compiled and pure paths must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from wordlength import _kernels_py

try:
    from wordlength import _kernels
except ImportError:
    _kernels = None

BACKENDS = [_kernels_py] + ([_kernels] if _kernels is not None else [])
both = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")


@pytest.mark.parametrize("kernels", BACKENDS)
class TestSplitMix64Reference:
    def test_published_vectors_seed_1234567(self, kernels):
        # reference output of the SplitMix64 algorithm for seed 1234567
        assert kernels.splitmix64_stream(1234567, 5) == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ]

    def test_published_vectors_seed_0(self, kernels):
        assert kernels.splitmix64_stream(0, 2) == [
            16294208416658607535,
            7960286522194355700,
        ]

    def test_uniforms_are_top_53_bits(self, kernels):
        raws = kernels.splitmix64_stream(99, 50)
        uniforms = kernels.uniform_stream(99, 50)
        assert uniforms == [(x >> 11) / 2.0**53 for x in raws]
        assert all(0.0 <= u < 1.0 for u in uniforms)


@pytest.mark.parametrize("kernels", BACKENDS)
class TestKernelContracts:
    def test_count_clusters(self, kernels):
        assert kernels.count_clusters("wissenschaft", "aeiou") == 3
        assert kernels.count_clusters("", "aeiou") == 0
        assert kernels.count_clusters("brrr", "aeiou") == 0
        assert kernels.count_clusters("aeiou", "aeiou") == 1
        assert kernels.count_clusters("schön", "aeioäöü") == 1

    def test_shifted_pmf_normalizes(self, kernels):
        for m in (0.0, 0.5, 3.0, 40.0):
            total = sum(kernels.shifted_pmf(k, m) for k in range(1, int(m) + 120))
            assert abs(total - 1.0) < 1e-12

    def test_histogram_counts_sum(self, kernels):
        hist = kernels.sample_length_histogram(10000, 2.0, 1.0, 5)
        assert sum(hist) == 10000


@both
class TestBackendParity:
    def test_rng_streams(self):
        for seed in (0, 1, 42, 2**63, 2**64 - 1, -1):
            assert _kernels.splitmix64_stream(seed, 200) == \
                _kernels_py.splitmix64_stream(seed, 200)
            assert _kernels.uniform_stream(seed, 200) == \
                _kernels_py.uniform_stream(seed, 200)

    def test_pmf_bit_identical(self):
        for k in range(1, 60):
            for m in (0.0, 1e-9, 0.3, 1.0, 2.5, 9.99, 10.01, 77.7):
                assert _kernels.shifted_pmf(k, m) == _kernels_py.shifted_pmf(k, m)
            for lo, hi, tc in ((0.0, 2.0, 0.0), (0.5, 1.5, 0.0),
                               (0.0, 1.43, 0.0124), (1.0, 1.0, 0.0),
                               (0.2, 0.2 + 5e-7, 0.0)):
                assert _kernels.mixture_pmf_kernel(k, lo, hi, tc) == \
                    _kernels_py.mixture_pmf_kernel(k, lo, hi, tc)

    def test_regression_sums_bit_identical(self):
        rng = np.random.default_rng(321)
        w = rng.uniform(1, 500, 20000).round()
        length = rng.integers(1, 7, 20000).astype(np.float64)
        t = np.sort(rng.uniform(1e-6, 1 - 1e-6, 20000))
        assert _kernels.weighted_mean(w, length) == \
            _kernels_py.weighted_mean(w, length)
        assert _kernels.wls_sums(w, length, t, 1.705249) == \
            _kernels_py.wls_sums(w, length, t, 1.705249)

    def test_samplers_bit_identical(self):
        ms = [0.0, 0.01, 0.5, 2.0, 9.5, 11.0, 45.0] * 300
        assert _kernels.sample_poisson_lengths(ms, 7) == \
            _kernels_py.sample_poisson_lengths(ms, 7)
        assert _kernels.sample_length_histogram(50000, 1.705249, 0.982100, 29) == \
            _kernels_py.sample_length_histogram(50000, 1.705249, 0.982100, 29)

    def test_count_clusters_parity(self):
        words = ["", "a", "wissenschaft", "määränpää", "œuvre", "syzygy"]
        for word in words:
            for vowels in ("aeiou", "aeiouyäöœ"):
                assert _kernels.count_clusters(word, vowels) == \
                    _kernels_py.count_clusters(word, vowels)


class TestBackendSelection:
    def test_backend_names(self):
        assert _kernels_py.BACKEND_NAME == "pure"
        if _kernels is not None:
            assert _kernels.BACKEND_NAME == "compiled"

    def test_env_override_forces_pure(self):
        env = dict(os.environ, WORDLENGTH_PURE="1")
        out = subprocess.run(
            [sys.executable, "-c",
             "from wordlength._backend import BACKEND_NAME; print(BACKEND_NAME)"],
            capture_output=True, text=True, env=env, check=True)
        assert out.stdout.strip() == "pure"

    @both
    def test_default_prefers_compiled(self):
        env = {k: v for k, v in os.environ.items() if k != "WORDLENGTH_PURE"}
        out = subprocess.run(
            [sys.executable, "-c",
             "from wordlength._backend import BACKEND_NAME; print(BACKEND_NAME)"],
            capture_output=True, text=True, env=env, check=True)
        assert out.stdout.strip() == "compiled"
