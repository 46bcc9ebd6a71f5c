"""Parameter estimation from a rank spectrum.

lambda0 is pinned to the token-weighted mean syllable length; lambda1 is
the single free parameter of a frequency-weighted least-squares fit of
type lengths against the linear conditional-mean curve.  Estimation sums
run over entries in (freq desc, length asc) order, which makes the result
bit-identical under token reordering, tie renaming, and corpus
duplication.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from wordlength._backend import kernels
from wordlength.errors import DegenerateSpectrumError, EmptyTextError
from wordlength.model import (
    DEFAULT_LAMBDA1_MIN,
    Invariants,
    ModelParams,
    compute_invariants,
    mixture_pmf,
)
from wordlength.rules import LanguageRules, TokenStream
from wordlength.spectrum import LengthSpectrum, RankSpectrum, build_rank_spectrum, length_spectrum

# below this many tokens, estimates are reported but flagged unreliable
MIN_RELIABLE_TOKENS = 100

# bins are merged from the tail until every expected count reaches this
CHI2_MIN_EXPECTED = 5.0


@dataclass(frozen=True)
class FitResult:
    """Fitted parameters, invariants and fit diagnostics for one text."""

    params: ModelParams
    invariants: Invariants
    chi_square: float
    dof: int
    n_tokens: int
    n_types: int
    clipped: bool
    unreliable: bool


def _estimation_arrays(spec: RankSpectrum):
    """Extract (freq, length, t) in canonical (freq desc, length asc) order."""
    order = sorted(spec.entries, key=lambda e: (-e.freq, e.length))
    freq = np.array([e.freq for e in order], dtype=np.float64)
    length = np.array([e.length for e in order], dtype=np.float64)
    t = np.array([e.t for e in order], dtype=np.float64)
    return freq, length, t


def estimate_lambda0(spec: RankSpectrum) -> float:
    """Token-weighted mean syllable length."""
    if not spec.entries:
        raise EmptyTextError("empty rank spectrum")
    freq, length, _ = _estimation_arrays(spec)
    return kernels.weighted_mean(freq, length)


def estimate_lambda1(
    spec: RankSpectrum,
    lambda0: float,
    lambda1_min: float = DEFAULT_LAMBDA1_MIN,
) -> tuple[float, bool]:
    """Weighted least-squares estimate of lambda1, with lambda0 held fixed.

    Regresses length - 2*lambda0*t on x = 1 - 2t with token frequencies as
    weights.  Returns (lambda1, clipped): the raw estimate is clipped into
    [lambda1_min, lambda0] and the flag reports whether that happened.
    """
    if not spec.entries:
        raise EmptyTextError("empty rank spectrum")
    freq, length, t = _estimation_arrays(spec)
    sxy, sxx = kernels.wls_sums(freq, length, t, lambda0)
    if sxx == 0.0:
        raise DegenerateSpectrumError(
            "all rank mass sits in one frequency block (every t = 0.5); "
            "lambda1 is unidentifiable")
    raw = sxy / sxx
    clipped_value = min(max(raw, lambda1_min), lambda0)
    return clipped_value, clipped_value != raw


def goodness_of_fit(
    obs: LengthSpectrum,
    params: ModelParams,
    min_expected: float = CHI2_MIN_EXPECTED,
) -> tuple[float, int]:
    """Pearson chi-square of an observed length histogram against the mixture.

    Bins span length 1 up to the larger of the observed maximum and the
    model's effective support; the last bin absorbs the tail probability.
    Trailing bins are merged until every expected count reaches
    min_expected.  dof = bins - 1 - 2 (two fitted parameters), floored at 1.
    """
    n = obs.total_tokens
    if n < 1:
        raise EmptyTextError("empty length spectrum")
    if any(c > 0 and mixture_pmf(k, params) == 0.0
           for k, c in obs.counts.items()):
        return float("inf"), 1  # observed mass where the model puts none
    k_model = int(np.ceil(2.0 * params.lambda0 + 20.0))
    k_hi = max(max(obs.counts, default=1), k_model)
    observed = [float(obs.counts.get(k, 0)) for k in range(1, k_hi + 1)]
    pmf = [mixture_pmf(k, params) for k in range(1, k_hi + 1)]
    expected = [n * p for p in pmf]
    expected[-1] = n * max(1.0 - sum(pmf[:-1]), 0.0)  # open-ended tail bin

    while len(expected) > 1 and min(expected) < min_expected:
        expected[-2] += expected[-1]
        observed[-2] += observed[-1]
        del expected[-1], observed[-1]

    chi_square = 0.0
    for o, e in zip(observed, expected):
        if e > 0.0:
            chi_square += (o - e) ** 2 / e
        elif o > 0.0:
            chi_square = float("inf")
            break
    dof = max(len(expected) - 3, 1)
    return chi_square, dof


def fit_spectrum(
    spec: RankSpectrum, lambda1_min: float = DEFAULT_LAMBDA1_MIN
) -> FitResult:
    """Estimate both parameters from a rank spectrum and score the fit."""
    lambda0 = estimate_lambda0(spec)
    lambda1, clipped = estimate_lambda1(spec, lambda0, lambda1_min)
    params = ModelParams(lambda0=lambda0, lambda1=lambda1, lambda1_min=lambda1_min)
    invariants = compute_invariants(params)
    chi_square, dof = goodness_of_fit(length_spectrum(spec), params)
    return FitResult(
        params=params,
        invariants=invariants,
        chi_square=chi_square,
        dof=dof,
        n_tokens=spec.total_tokens,
        n_types=spec.total_types,
        clipped=clipped,
        unreliable=spec.total_tokens < MIN_RELIABLE_TOKENS,
    )


def fit_text(
    stream: TokenStream,
    rules: LanguageRules,
    lambda1_min: float = DEFAULT_LAMBDA1_MIN,
) -> FitResult:
    """Full pipeline: token stream -> rank spectrum -> fitted parameters."""
    return fit_spectrum(build_rank_spectrum(stream, rules), lambda1_min)
