"""Tokenization and syllable counting driven by per-language rule packs.

A rule pack declares the word-forming letters, the vowels, optional
diphthong exception clusters, and whether a final "e" is silent.  Syllable
counting is vowel-cluster counting: the number of maximal vowel runs in a
word, adjusted by the exceptions and the silent-e rule, never below 1.
Packs for en, fr, de, sv, es and it ship with the package as data files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from wordlength._backend import kernels
from wordlength.errors import RulePackError, UnknownLanguageError

BUILTIN_LANGUAGES = ("de", "en", "es", "fr", "it", "sv")


@dataclass(frozen=True)
class LanguageRules:
    """Character-level rules for one language."""

    language_code: str
    letters: frozenset[str]
    vowels: frozenset[str]
    diphthong_exceptions: tuple[str, ...] = ()
    final_e_silent: bool = False
    min_syllables: int = 1

    def __post_init__(self):
        if not self.vowels <= self.letters:
            raise RulePackError(
                f"{self.language_code}: vowels must be a subset of letters")
        if self.min_syllables != 1:
            raise RulePackError("min_syllables is fixed at 1")
        for cluster in self.diphthong_exceptions:
            if len(cluster) < 2 or not set(cluster) <= self.vowels:
                raise RulePackError(
                    f"{self.language_code}: diphthong exception {cluster!r} "
                    "must be a vowel string of length >= 2")
        # precompiled token pattern and vowel string for the kernels
        alphabet = "".join(sorted(self.letters))
        object.__setattr__(
            self, "_token_re", re.compile(f"[{re.escape(alphabet)}]+"))
        object.__setattr__(self, "_vowel_str", "".join(sorted(self.vowels)))

    _token_re: re.Pattern = field(init=False, repr=False, compare=False)
    _vowel_str: str = field(init=False, repr=False, compare=False)


@dataclass(frozen=True)
class TokenStream:
    """Lowercased word tokens of one text, in document order."""

    tokens: tuple[str, ...]
    source_id: str = ""


def tokenize(text: str, rules: LanguageRules, source_id: str = "") -> TokenStream:
    """Split text into maximal runs of the rule pack's letters.

    The text is Unicode-casefolded first, so capitalized forms merge with
    their lowercase spellings.  Digits, punctuation, whitespace, hyphens
    and apostrophes (unless declared as letters) all separate tokens.
    """
    folded = text.casefold()
    return TokenStream(
        tokens=tuple(rules._token_re.findall(folded)), source_id=source_id)


def count_syllables(word: str, rules: LanguageRules) -> int:
    """Syllables of a token: its maximal vowel clusters, adjusted by rules.

    Each diphthong-exception occurrence splits one cluster into two nuclei;
    a silent final "e" (preceded by a non-vowel, with at least one other
    cluster) is deducted.  The result is clamped below at 1.
    """
    count = kernels.count_clusters(word, rules._vowel_str)
    for cluster in rules.diphthong_exceptions:
        count += word.count(cluster)
    if (
        rules.final_e_silent
        and count >= 2
        and word.endswith("e")
        and word[-2] not in rules.vowels
    ):
        count -= 1
    return max(count, rules.min_syllables)


def _parse_key_values(text: str, origin: str) -> dict[str, str]:
    """Parse the simple `key = value` format shared by pack and table files."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise RulePackError(f"{origin}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        entries[key.strip()] = value.strip()
    return entries


def parse_rule_pack(text: str, origin: str = "<string>") -> LanguageRules:
    """Build LanguageRules from rule-pack file content."""
    entries = _parse_key_values(text, origin)
    missing = {"language", "letters", "vowels"} - entries.keys()
    if missing:
        raise RulePackError(f"{origin}: missing keys: {', '.join(sorted(missing))}")
    exceptions = tuple(
        s for s in (p.strip() for p in entries.get("diphthong_exceptions", "").split(","))
        if s
    )
    flag = entries.get("final_e_silent", "false").lower()
    if flag not in ("true", "false"):
        raise RulePackError(f"{origin}: final_e_silent must be true or false")
    return LanguageRules(
        language_code=entries["language"],
        letters=frozenset(entries["letters"]),
        vowels=frozenset(entries["vowels"]),
        diphthong_exceptions=exceptions,
        final_e_silent=(flag == "true"),
    )


def load_rules_file(path: str | Path) -> LanguageRules:
    """Load a rule pack from an arbitrary file path."""
    p = Path(path)
    return parse_rule_pack(p.read_text(encoding="utf-8"), origin=str(p))


def load_rules(language: str) -> LanguageRules:
    """Load the built-in rule pack for a language code."""
    code = language.strip().lower()
    pack = resources.files("wordlength.data").joinpath(f"{code}.rules")
    if not pack.is_file():
        raise UnknownLanguageError(
            f"no rule pack for language {language!r}; "
            f"built-ins: {', '.join(BUILTIN_LANGUAGES)}")
    return parse_rule_pack(pack.read_text(encoding="utf-8"), origin=f"{code}.rules")


def available_languages() -> tuple[str, ...]:
    """Language codes with built-in rule packs."""
    return BUILTIN_LANGUAGES
