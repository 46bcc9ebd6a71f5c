"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines alongside the pytest verdicts.
"""

import math
import re
import time

import numpy as np
import pytest

from wordlength.corpus import analyze_corpus, classify, group_means, load_manifest
from wordlength.demo import DEMO_TEXTS, build_demo_corpus
from wordlength.estimate import estimate_lambda0, estimate_lambda1, fit_text
from wordlength.model import (
    Invariants,
    ModelParams,
    compute_invariants,
    conditional_mean,
    mixture_pmf,
    params_from_invariants,
    shifted_poisson_pmf,
)
from wordlength.plotting import PlotConfig, plot_plane
from wordlength.rules import TokenStream
from wordlength.spectrum import RankEntry, RankSpectrum, block_positions
from wordlength.synth import SynthConfig, generate_rank_spectrum, sample_lengths


def report(number: int, description: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance {number:02d}] {status}: {description}{suffix}")
    assert ok, f"criterion {number} failed: {description}{suffix}"


def parameter_grid():
    """10x10 grid of valid (lambda0, lambda1), including clamped rows."""
    for lambda0 in np.linspace(1.0, 4.0, 10):
        for lambda1 in np.linspace(0.5, lambda0, 10):
            yield ModelParams(float(lambda0), min(float(lambda1), float(lambda0)))


def test_01_invariant_algebra_anchors():
    anchors = [(0.34, 0.6), (0.08, 0.6), (0.84, 0.6)]

    def round_trip():
        worst = 0.0
        for i_lang, alpha in anchors:
            inv = compute_invariants(params_from_invariants(Invariants(i_lang, alpha)))
            worst = max(worst, abs(inv.i_lang - i_lang), abs(inv.alpha - alpha))
        return worst

    round_trip()  # warm-up
    start = time.perf_counter()
    worst = round_trip()
    elapsed_ms = (time.perf_counter() - start) * 1000
    report(1, "invariant algebra anchors round-trip at 1e-9",
           worst < 1e-9 and elapsed_ms < 1.0,
           f"max error {worst:.2e}, {elapsed_ms:.3f} ms")


def test_02_degenerate_case_exact():
    exact = True
    for lambda0 in (1.5, 2.0, 3.0):
        params = ModelParams(lambda0, lambda0)
        for k in range(1, 31):
            if mixture_pmf(k, params) != shifted_poisson_pmf(k, lambda0 - 1.0):
                exact = False
    report(2, "alpha=0 mixture equals the fixed-parameter pmf exactly", exact)


def test_03_normalization_grid():
    worst_deficit = 0.0
    for params in parameter_grid():
        kmax = math.ceil(2 * params.lambda0 + 20)
        total = sum(mixture_pmf(k, params) for k in range(1, kmax + 1))
        worst_deficit = max(worst_deficit, 1.0 - total)
    report(3, "pmf sums to 1 - 1e-9 over the 10x10 grid",
           worst_deficit < 1e-9, f"worst tail deficit {worst_deficit:.2e}")


def test_04_oracle_equivalence():
    from scipy.integrate import quad

    def quad_pmf(k, params):
        def integrand(t):
            m = max(conditional_mean(t, params) - 1.0, 0.0)
            if m == 0.0:
                return 1.0 if k == 1 else 0.0
            if k - 1 > 20:
                return math.exp(-m + (k - 1) * math.log(m) - math.lgamma(k))
            return math.exp(-m) * m ** (k - 1) / math.factorial(k - 1)

        t_clamp = 0.0
        if params.lambda0 > params.lambda1 and params.lambda1 < 1.0:
            t_clamp = (1.0 - params.lambda1) / (
                2.0 * (params.lambda0 - params.lambda1))
        points = [t_clamp] if 0.0 < t_clamp < 1.0 else None
        value, _ = quad(integrand, 0.0, 1.0, points=points, limit=200,
                        epsabs=1e-11, epsrel=1e-11)
        return value

    start = time.perf_counter()
    worst = 0.0
    for params in parameter_grid():
        for k in range(1, 31):
            diff = abs(mixture_pmf(k, params) - quad_pmf(k, params))
            worst = max(worst, diff)
    elapsed = time.perf_counter() - start
    report(4, "closed form matches adaptive quadrature to 1e-8",
           worst < 1e-8 and elapsed < 5.0,
           f"max |diff| {worst:.2e}, {elapsed:.2f} s")


def test_05_estimator_recovery():
    true_params = params_from_invariants(Invariants(0.34, 0.6))
    start = time.perf_counter()
    cfg = SynthConfig(params=true_params, n_tokens=200000, n_types=2000, seed=29)
    spec = generate_rank_spectrum(cfg)
    lambda0 = estimate_lambda0(spec)
    lambda1, _ = estimate_lambda1(spec, lambda0)
    inv = compute_invariants(ModelParams(lambda0, lambda1))
    elapsed = time.perf_counter() - start
    d0 = abs(lambda0 - true_params.lambda0)
    d1 = abs(lambda1 - true_params.lambda1)
    da = abs(inv.alpha - 0.6)
    di = abs(inv.i_lang - 0.34)
    ok = d0 < 0.02 and d1 < 0.05 and da < 0.05 and di < 0.05 and elapsed < 10.0
    report(5, "synthetic corpus recovery (V=2000, N=200000, seed 29)", ok,
           f"dl0={d0:.4f} dl1={d1:.4f} dalpha={da:.4f} dI={di:.4f}, "
           f"{elapsed:.2f} s")


def test_06_exact_model_regression():
    cases = [
        ((2.0, 1.0), [40, 30, 20, 7, 2, 1]),
        ((3.0, 1.2), [100, 60, 60, 30, 10, 5, 5, 5, 1]),
        ((1.8, 1.5), [13, 8, 5, 3, 2, 1, 1]),
    ]
    worst = 0.0
    for (lambda0, lambda1), freqs in cases:
        positions = block_positions(freqs)
        entries = tuple(
            RankEntry(f"w{i}", f, lambda1 + 2.0 * (lambda0 - lambda1) * t, t)
            for i, (f, t) in enumerate(zip(freqs, positions)))
        spec = RankSpectrum(entries=entries, total_tokens=sum(freqs),
                            total_types=len(freqs))
        est0 = estimate_lambda0(spec)
        est1, _ = estimate_lambda1(spec, est0)
        worst = max(worst, abs(est1 - lambda1))
    report(6, "noise-free spectra recover lambda1 to 1e-9", worst < 1e-9,
           f"max error {worst:.2e}")


def test_07_classification_anchors():
    de = classify(0.34, 0.6)
    en = classify(0.08, 0.8)
    it = classify(0.84, 0.6)
    ok = (
        (de.language, de.genre) == ("de", "letters")
        and en.language == "en"
        and en.genre_ties == ("newspaper", "scientific")
        and (it.language, it.genre) == ("it", "letters")
    )
    report(7, "reference anchors classify to de/en/it with the prose tie", ok,
           f"en genre ties {en.genre_ties}")


def test_08_invariance_suite(toy_rules):
    import random

    tokens = (("ba",) * 21 + ("baba",) * 13 + ("bababa",) * 8 + ("da",) * 5
              + ("daba", "dababa", "a"))
    base = fit_text(TokenStream(tokens=tokens), toy_rules)

    shuffled = list(tokens)
    random.Random(77).shuffle(shuffled)
    permuted = fit_text(TokenStream(tokens=tuple(shuffled)), toy_rules)

    # swap spellings inside the tied freq-1 block without touching lengths
    renamed_tokens = tuple(
        {"daba": "gaba", "dababa": "xababa"}.get(tok, tok) for tok in tokens)
    renamed = fit_text(TokenStream(tokens=renamed_tokens), toy_rules)

    doubled = fit_text(TokenStream(tokens=tokens * 2), toy_rules)

    ok_permutation = permuted == base
    ok_rename = (
        renamed.params == base.params
        and renamed.invariants == base.invariants
        and renamed.chi_square == base.chi_square
    )
    ok_double = (
        doubled.params.lambda0 == base.params.lambda0
        and doubled.params.lambda1 == base.params.lambda1
        and doubled.invariants.i_lang == base.invariants.i_lang
        and doubled.invariants.alpha == base.invariants.alpha
    )
    report(8, "token permutation, tie renaming and duplication invariance",
           ok_permutation and ok_rename and ok_double,
           f"perm={ok_permutation} rename={ok_rename} double={ok_double}")


def test_09_figure_replication(tmp_path):
    svgs = []
    for run_dir in ("run-a", "run-b"):
        manifest = build_demo_corpus(tmp_path / run_dir)
        entries = load_manifest(manifest)
        results = analyze_corpus(entries)
        cfg = PlotConfig(results=results, ref_language="de", ref_genre="letters")
        svgs.append(plot_plane(cfg))
    svg = svgs[0]

    markers = len(re.findall(r'class="marker" data-text-id=', svg))
    vlines = re.findall(r'class="ref-line" data-group="de" x1="([0-9.]+)"', svg)
    hlines = re.findall(r'class="ref-line" data-group="letters" x1="[0-9.]+" '
                        r'y1="([0-9.]+)"', svg)

    means = group_means(analyze_corpus(load_manifest(
        build_demo_corpus(tmp_path / "run-a"))))
    x_expected = 60 + means.language_i["de"] * (800 - 120)
    y_expected = (600 - 60) + means.genre_alpha["letters"] * (60 - (600 - 60))

    ok = (
        svgs[0] == svgs[1]
        and markers == len(DEMO_TEXTS) == 10
        and len(vlines) == 1 and len(hlines) == 1
        and abs(float(vlines[0]) - x_expected) <= 0.5
        and abs(float(hlines[0]) - y_expected) <= 0.5
    )
    report(9, "demo figure: 10 markers, both mean lines, byte-identical", ok,
           f"markers={markers} vline={vlines} hline={hlines}")


def test_10_sampler_fidelity():
    params = ModelParams(2.0, 1.0)
    start = time.perf_counter()
    ls = sample_lengths(params, 10**6, seed=1)
    elapsed = time.perf_counter() - start
    p1 = ls.counts[1] / ls.total_tokens
    mean = sum(k * c for k, c in ls.counts.items()) / ls.total_tokens
    target = (1 - math.exp(-2)) / 2
    ok = (abs(p1 - target) < 0.003 and abs(mean - 2.0) < 0.01
          and elapsed < 10.0)
    report(10, "1e6-draw sampler matches closed-form head and mean", ok,
           f"|dP1|={abs(p1 - target):.5f} |dmean|={abs(mean - 2.0):.5f}, "
           f"{elapsed:.2f} s")
