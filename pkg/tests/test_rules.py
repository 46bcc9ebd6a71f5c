"""Tokenization and syllable counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordlength.errors import RulePackError, UnknownLanguageError
from wordlength.rules import (
    LanguageRules,
    available_languages,
    count_syllables,
    load_rules,
    load_rules_file,
    parse_rule_pack,
    tokenize,
)

de_words = st.text(alphabet="abcdefghijklmnopqrstuvwxyzäöüß", min_size=1,
                   max_size=20)


class TestTokenize:
    def test_whitespace_and_punctuation_split(self, de):
        assert tokenize("Das ist gut.", de).tokens == ("das", "ist", "gut")

    def test_empty_input(self, de):
        assert tokenize("", de).tokens == ()

    def test_hyphen_and_digit_separate(self, en):
        assert tokenize("e-mail 2x", en).tokens == ("e", "mail", "x")

    def test_casefold_merges_sharp_s(self, de):
        assert tokenize("daß dass", de).tokens == ("dass", "dass")

    def test_apostrophe_elision_splits(self, it):
        assert tokenize("L'uomo", it).tokens == ("l", "uomo")

    def test_diacritics_kept(self, de):
        assert tokenize("schön übel", de).tokens == ("schön", "übel")

    def test_source_id_carried(self, de):
        assert tokenize("gut", de, source_id="brief-1").source_id == "brief-1"

    @given(st.lists(de_words, min_size=0, max_size=12))
    @settings(max_examples=100)
    def test_concatenating_texts_concatenates_streams(self, de, words):
        # newline-terminated texts, so the seam never glues two words
        text_a = " ".join(words[: len(words) // 2]) + "\n"
        text_b = " ".join(words[len(words) // 2:]) + "\n"
        combined = tokenize(text_a + text_b, de).tokens
        assert combined == tokenize(text_a, de).tokens + tokenize(text_b, de).tokens

    @given(st.text(max_size=80))
    @settings(max_examples=200)
    def test_tokens_contain_only_letters(self, de, text):
        for token in tokenize(text, de).tokens:
            assert token
            assert set(token) <= de.letters


class TestCountSyllables:
    def test_german_clusters(self, de):
        assert count_syllables("wissenschaft", de) == 3

    def test_single_consonant_clamps(self, de, en):
        assert count_syllables("b", de) == 1
        assert count_syllables("b", en) == 1

    def test_silent_final_e(self, en):
        assert count_syllables("made", en) == 1

    def test_italian_diphthong_single_cluster(self, it):
        assert count_syllables("ciao", it) == 1

    def test_y_is_vowel_in_english(self, en):
        assert count_syllables("syzygy", en) == 3
        assert count_syllables("rhythm", en) == 1

    def test_y_is_consonant_in_german(self, de):
        assert count_syllables("mythos", de) == 1

    def test_final_e_kept_after_vowel(self, en):
        # the final e is part of the "ee" cluster, not a silent singleton
        assert count_syllables("tree", en) == 1

    def test_final_e_kept_when_only_cluster(self, en):
        assert count_syllables("the", en) == 1

    def test_german_ie_single_cluster(self, de):
        assert count_syllables("liebe", de) == 2

    def test_diphthong_exception_splits_cluster(self):
        rules = LanguageRules(
            language_code="xx",
            letters=frozenset("abcdefghijklmnopqrstuvwxyz"),
            vowels=frozenset("aeiou"),
            diphthong_exceptions=("ia",),
        )
        assert count_syllables("dia", rules) == 2
        assert count_syllables("diadia", rules) == 4

    @given(de_words)
    @settings(max_examples=200)
    def test_count_bounded_by_word_length(self, de, word):
        count = count_syllables(word, de)
        assert 1 <= count <= len(word)

    @given(de_words)
    @settings(max_examples=50)
    def test_pure_function(self, de, word):
        assert count_syllables(word, de) == count_syllables(word, de)


class TestRulePacks:
    def test_all_builtins_load(self):
        for code in available_languages():
            rules = load_rules(code)
            assert rules.language_code == code
            assert rules.vowels <= rules.letters
            assert rules.min_syllables == 1

    def test_unknown_language(self):
        with pytest.raises(UnknownLanguageError):
            load_rules("xx")

    def test_custom_pack_file(self, tmp_path):
        pack = tmp_path / "xx.rules"
        pack.write_text(
            "language = xx\nletters = abc\nvowels = a\nfinal_e_silent = false\n",
            encoding="utf-8")
        rules = load_rules_file(pack)
        assert rules.language_code == "xx"
        assert tokenize("abc cab 12", rules).tokens == ("abc", "cab")

    def test_missing_keys_rejected(self):
        with pytest.raises(RulePackError, match="missing keys"):
            parse_rule_pack("language = xx\nletters = abc\n")

    def test_vowels_must_be_letters(self):
        with pytest.raises(RulePackError, match="subset"):
            parse_rule_pack("language = xx\nletters = bc\nvowels = a\n")

    def test_bad_flag_rejected(self):
        with pytest.raises(RulePackError, match="final_e_silent"):
            parse_rule_pack(
                "language = xx\nletters = abc\nvowels = a\nfinal_e_silent = ja\n")

    def test_bad_exception_rejected(self):
        with pytest.raises(RulePackError, match="exception"):
            LanguageRules(language_code="xx", letters=frozenset("abc"),
                          vowels=frozenset("a"), diphthong_exceptions=("ab",))

    def test_comments_and_blank_lines_ignored(self):
        rules = parse_rule_pack(
            "# comment\n\nversion = 1\nlanguage = xx\nletters = abc\nvowels = a\n")
        assert rules.language_code == "xx"
