import pytest

from wordlength.rules import LanguageRules, load_rules
from wordlength.spectrum import RankEntry, RankSpectrum, block_positions


@pytest.fixture(scope="session")
def de():
    return load_rules("de")


@pytest.fixture(scope="session")
def en():
    return load_rules("en")


@pytest.fixture(scope="session")
def it():
    return load_rules("it")


@pytest.fixture(scope="session")
def toy_rules():
    """Minimal a-z rules: vowel 'a' only, so cluster counts are easy to trace."""
    return LanguageRules(
        language_code="toy",
        letters=frozenset("abcdefghijklmnopqrstuvwxyz"),
        vowels=frozenset("a"),
    )


def spectrum_from_counts(pairs):
    """Build a RankSpectrum from (word_type, freq, length) triples."""
    ordered = sorted(pairs, key=lambda p: (-p[1], p[0]))
    freqs = [f for _, f, _ in ordered]
    positions = block_positions(freqs)
    entries = tuple(
        RankEntry(word_type=w, freq=f, length=float(length), t=t)
        for (w, f, length), t in zip(ordered, positions)
    )
    return RankSpectrum(entries=entries, total_tokens=sum(freqs),
                        total_types=len(entries))
