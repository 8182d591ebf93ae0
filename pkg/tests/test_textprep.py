import io
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lineometer.textprep import (
    builtin_lexicon,
    count_syllables,
    load_lexicon,
    normalize_word,
    syllabify_text,
    syllabify_tokens,
    tokenize,
)


class TestNormalize:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("Water", "water"),
            ('"Stop!"', "stop"),
            ("(hello)", "hello"),
            ("end.", "end"),
            ("well...", "well"),
            ("don’t", "don't"),
            ("‘quoted’", "quoted"),
            ("twenty-two,", "twenty-two"),
            ("--", ""),
            ("1962", ""),
            ("...", ""),
            ("", ""),
            ("x", "x"),
        ],
    )
    def test_cases(self, raw, expected):
        assert normalize_word(raw) == expected

    def test_internal_punctuation_survives(self):
        assert normalize_word("o'clock") == "o'clock"
        assert normalize_word("self-made") == "self-made"


class TestTokenize:
    def test_positions_are_consecutive_over_kept_tokens(self):
        tokens = tokenize("One 2 three -- four.")
        assert [t.surface for t in tokens] == ["one", "three", "four"]
        assert [t.position for t in tokens] == [1, 2, 3]

    def test_empty_text(self):
        assert tokenize("") == []
        assert tokenize("12 34 --") == []

    @given(st.text())
    def test_positions_always_one_based_and_dense(self, text):
        tokens = tokenize(text)
        assert [t.position for t in tokens] == list(range(1, len(tokens) + 1))
        assert all(t.surface for t in tokens)


class TestHeuristic:
    @pytest.mark.parametrize(
        "word,count",
        [
            ("water", 2),
            ("table", 2),
            ("little", 2),
            ("the", 1),
            ("syllable", 3),
            ("twenty-two", 3),
            ("stone", 1),
            ("once", 1),
            ("people", 2),
            ("nobody", 3),
            ("strength", 1),
        ],
    )
    def test_known_words(self, word, count):
        assert count_syllables(word) == count

    def test_clamped_to_one(self):
        # no vowel letters at all still counts as one spoken unit
        assert count_syllables("nth") == 1
        assert count_syllables("hm") == 1

    def test_hyphen_parts_counted_separately(self):
        # the silent-e rule applies inside each part
        assert count_syllables("make-believe") == count_syllables("make") + count_syllables(
            "believe"
        )

    def test_apostrophes_ignored(self):
        assert count_syllables("she'd") == 1
        assert count_syllables("o'clock") == 2

    def test_lexicon_wins_on_whole_word(self):
        assert count_syllables("cafe") == 1
        assert count_syllables("cafe", {"cafe": 2}) == 2
        # lookup is on the whole word, not on hyphen parts
        assert count_syllables("cafe-bar", {"cafe": 2}) == 2

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            count_syllables("")

    @given(st.text(alphabet=st.characters(min_codepoint=97, max_codepoint=122), min_size=1))
    def test_always_at_least_one(self, word):
        assert count_syllables(word) >= 1

    @given(st.text(alphabet="aeiouy", min_size=1, max_size=30))
    def test_pure_vowel_runs_count_one(self, word):
        assert count_syllables(word) == 1


class TestGoldAgreement:
    def test_bare_heuristic_at_least_ninety_percent(self, gold_words):
        hits = sum(1 for w, c in gold_words.items() if count_syllables(w) == c)
        assert len(gold_words) == 200
        assert hits / len(gold_words) >= 0.90

    def test_builtin_lexicon_makes_it_total(self, gold_words):
        lexicon = builtin_lexicon()
        misses = {w: (count_syllables(w, lexicon), c) for w, c in gold_words.items()
                  if count_syllables(w, lexicon) != c}
        assert misses == {}

    def test_every_builtin_entry_overrides_the_heuristic(self):
        # entries the heuristic already gets right would be dead weight
        lexicon = builtin_lexicon()
        dead = [w for w, c in lexicon.items() if count_syllables(w) == c]
        assert dead == []
        assert all(c >= 1 for c in lexicon.values())


class TestFragment:
    def test_tokens_and_counts_match_hand_reading(self, fragment_text, fragment_gold):
        lexicon = builtin_lexicon()
        syllabified = syllabify_tokens(tokenize(fragment_text), lexicon)
        got = [(s.token.position, s.token.surface, s.syllables) for s in syllabified]
        assert got == fragment_gold

    def test_totals(self, fragment_text):
        lengths = syllabify_text(fragment_text, builtin_lexicon())
        assert lengths.size == 50
        assert lengths.sum() == 72
        assert lengths.dtype == np.int64


class TestLexiconParsing:
    def test_file_object(self):
        fh = io.StringIO("# comment\nwater\t5\n\nfire\t2\n")
        assert load_lexicon(fh) == {"water": 5, "fire": 2}

    def test_keys_are_normalized(self):
        assert load_lexicon(io.StringIO("Water!\t3\n")) == {"water": 3}

    def test_missing_tab(self):
        with pytest.raises(ValueError, match="word<TAB>count"):
            load_lexicon(io.StringIO("water 5\n"))

    def test_bad_count(self):
        with pytest.raises(ValueError, match="not an integer"):
            load_lexicon(io.StringIO("water\tfive\n"))

    def test_nonpositive_count(self):
        with pytest.raises(ValueError, match=">= 1"):
            load_lexicon(io.StringIO("water\t0\n"))

    def test_not_a_word(self):
        with pytest.raises(ValueError, match="not a word"):
            load_lexicon(io.StringIO("123\t4\n"))

    def test_duplicate_warns_and_keeps_last(self):
        with pytest.warns(UserWarning, match="duplicate"):
            lexicon = load_lexicon(io.StringIO("water\t2\nwater\t7\n"))
        assert lexicon == {"water": 7}

    def test_error_names_the_line(self):
        with pytest.raises(ValueError, match=":3:"):
            load_lexicon(io.StringIO("a\t1\nb\t2\nc\tx\n"))

    def test_builtin_loads_without_warning(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            lexicon = builtin_lexicon()
        assert lexicon["walked"] == 1
