"""Synthetic corpora drawn from the mixture model.

Type frequencies follow a Zipf law rounded to integers by largest
remainder; each type's syllable length is a single displaced-Poisson draw
at the type's coverage position.  All randomness comes from the pinned
SplitMix64 generator, so identical configs reproduce identical corpora on
any platform.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path

from wordlength._backend import kernels
from wordlength.errors import DomainError
from wordlength.model import ModelParams, conditional_mean
from wordlength.spectrum import LengthSpectrum, RankEntry, RankSpectrum, block_positions

# consonant digits for pseudo-corpus words; excludes every built-in vowel
# (y included) so the encoded index never adds a syllable
_CODE_ALPHABET = "bcdfghjklmnpqrstvwxz"


@dataclass(frozen=True)
class SynthConfig:
    """Generator settings: model, corpus size, Zipf exponent, seed."""

    params: ModelParams
    n_tokens: int
    n_types: int
    zipf_exponent: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.n_types < 2:
            raise DomainError(f"need at least 2 types, got {self.n_types}")
        if self.n_tokens < self.n_types:
            raise DomainError(
                f"n_tokens ({self.n_tokens}) must be >= n_types ({self.n_types})")
        if not self.zipf_exponent > 0:
            raise DomainError(f"zipf_exponent must be > 0, got {self.zipf_exponent}")


def zipf_frequencies(n_tokens: int, n_types: int, exponent: float) -> list[int]:
    """Integer frequencies proportional to rank**-exponent.

    Largest-remainder rounding keeps the sum at n_tokens; any zero is then
    bumped to 1, so the final sum can exceed n_tokens slightly.
    """
    weights = [r ** -exponent for r in range(1, n_types + 1)]
    total = math.fsum(weights)
    raw = [n_tokens * w / total for w in weights]
    freqs = [int(f) for f in raw]
    shortfall = n_tokens - sum(freqs)
    by_remainder = sorted(range(n_types), key=lambda i: (freqs[i] - raw[i], i))
    for i in by_remainder[:shortfall]:
        freqs[i] += 1
    return [max(f, 1) for f in freqs]


def generate_rank_spectrum(cfg: SynthConfig) -> RankSpectrum:
    """Draw a full synthetic rank spectrum for the configured model."""
    freqs = zipf_frequencies(cfg.n_tokens, cfg.n_types, cfg.zipf_exponent)
    positions = block_positions(freqs)
    ms = [max(conditional_mean(t, cfg.params) - 1.0, 0.0) for t in positions]
    lengths = kernels.sample_poisson_lengths(ms, cfg.seed)
    entries = [
        RankEntry(word_type=f"w{r}", freq=f, length=float(k), t=t)
        for r, (f, k, t) in enumerate(zip(freqs, lengths, positions), start=1)
    ]
    entries.sort(key=lambda e: (-e.freq, e.word_type))
    return RankSpectrum(
        entries=tuple(entries),
        total_tokens=sum(freqs),
        total_types=len(entries),
    )


def sample_lengths(params: ModelParams, n: int, seed: int) -> LengthSpectrum:
    """Histogram of n independent draws from the mixture.

    Each draw picks a uniform coverage position, converts it to a Poisson
    parameter on the clamped conditional-mean curve, and draws a length.
    """
    if n < 1:
        raise DomainError(f"need at least 1 draw, got {n}")
    hist = kernels.sample_length_histogram(n, params.lambda0, params.lambda1, seed)
    counts = {k + 1: c for k, c in enumerate(hist) if c > 0}
    return LengthSpectrum(counts=counts, total_tokens=n)


def _letter_code(index: int) -> str:
    """Encode a positive integer in the consonant alphabet."""
    digits = []
    base = len(_CODE_ALPHABET)
    value = index
    while value:
        value, rem = divmod(value, base)
        digits.append(_CODE_ALPHABET[rem])
    return "".join(reversed(digits))


def pseudo_word(index: int, length: int) -> str:
    """A unique letters-only word with exactly `length` vowel clusters.

    The rank index becomes a consonant prefix and each syllable is a "ba",
    so tokenizing the emitted corpus with any built-in rule pack recovers
    the synthetic type frequencies and lengths exactly.
    """
    return _letter_code(index) + "ba" * length


def write_pseudo_corpus(spec: RankSpectrum, destination: str | Path | io.TextIOBase,
                        tokens_per_line: int = 12) -> None:
    """Write a plain-text corpus realizing a synthetic rank spectrum."""
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8") as fh:
            _write_corpus(spec, fh, tokens_per_line)
    else:
        _write_corpus(spec, destination, tokens_per_line)


def _write_corpus(spec: RankSpectrum, fh, tokens_per_line: int) -> None:
    line: list[str] = []
    for index, entry in enumerate(spec.entries, start=1):
        word = pseudo_word(index, int(entry.length))
        for _ in range(entry.freq):
            line.append(word)
            if len(line) >= tokens_per_line:
                fh.write(" ".join(line) + "\n")
                line.clear()
    if line:
        fh.write(" ".join(line) + "\n")
