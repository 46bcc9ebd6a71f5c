"""Rank spectrum and length histogram construction.

The rank spectrum lists word types by descending token frequency.  Each
type carries a coverage position t in (0, 1): the token-mass midpoint of
its equal-frequency block, i.e. all types sharing one frequency value get
the same t.  This makes every downstream estimate independent of how ties
are ordered.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from wordlength.errors import DomainError, EmptyTextError
from wordlength.rules import LanguageRules, TokenStream, count_syllables

SPECTRUM_CSV_COLUMNS = ("rank", "word_type", "freq", "length", "t")


@dataclass(frozen=True)
class RankEntry:
    """One word type: token frequency, syllable length, coverage position."""

    word_type: str
    freq: int
    length: float
    t: float


@dataclass(frozen=True)
class RankSpectrum:
    """Types ordered by (freq desc, word_type asc), with block positions."""

    entries: tuple[RankEntry, ...]
    total_tokens: int
    total_types: int


@dataclass(frozen=True)
class LengthSpectrum:
    """Token counts per syllable length."""

    counts: dict[int, int]
    total_tokens: int


def block_positions(freqs: list[int]) -> list[float]:
    """Coverage position for each of a descending frequency list.

    Types whose tokens span cumulative counts (F, F + B] as a block get
    t = (F + B/2) / N, shared across the block.
    """
    n = sum(freqs)
    positions: list[float] = []
    i = 0
    covered = 0
    while i < len(freqs):
        j = i
        block = 0
        while j < len(freqs) and freqs[j] == freqs[i]:
            block += freqs[j]
            j += 1
        t = (covered + block / 2) / n
        positions.extend([t] * (j - i))
        covered += block
        i = j
    return positions


def build_rank_spectrum(stream: TokenStream, rules: LanguageRules) -> RankSpectrum:
    """Count types, syllabify them, and assign block coverage positions."""
    if not stream.tokens:
        raise EmptyTextError(f"no tokens in {stream.source_id or 'text'}")
    counts = Counter(stream.tokens)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    freqs = [f for _, f in ordered]
    positions = block_positions(freqs)
    entries = tuple(
        RankEntry(
            word_type=w,
            freq=f,
            length=float(count_syllables(w, rules)),
            t=t,
        )
        for (w, f), t in zip(ordered, positions)
    )
    return RankSpectrum(
        entries=entries,
        total_tokens=sum(freqs),
        total_types=len(entries),
    )


def length_spectrum(spec: RankSpectrum) -> LengthSpectrum:
    """Aggregate token counts per syllable length."""
    counts: Counter[int] = Counter()
    for e in spec.entries:
        k = int(e.length)
        if k != e.length or k < 1:
            raise DomainError(
                f"length spectrum requires integer lengths >= 1, got {e.length}")
        counts[k] += e.freq
    return LengthSpectrum(counts=dict(sorted(counts.items())),
                          total_tokens=spec.total_tokens)


def _format_length(value: float) -> str:
    return str(int(value)) if value == int(value) else f"{value:.6f}"


def write_spectrum_csv(spec: RankSpectrum, destination: str | Path | io.TextIOBase) -> None:
    """Serialize a rank spectrum for inspection (rank,word_type,freq,length,t)."""
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            _write_spectrum(spec, fh)
    else:
        _write_spectrum(spec, destination)


def _write_spectrum(spec: RankSpectrum, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SPECTRUM_CSV_COLUMNS)
    for rank, e in enumerate(spec.entries, start=1):
        writer.writerow(
            [rank, e.word_type, e.freq, _format_length(e.length), f"{e.t:.6f}"])
