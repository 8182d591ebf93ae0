"""Tokenization and rule-based syllable counting for English text.

The syllable counter is a heuristic: it counts maximal vowel groups
(``a e i o u y``), drops a word-final silent ``e``, and keeps the final
syllable of consonant + ``le`` endings.  Words the rules get wrong are
handled through an exception lexicon; a small one covering common
irregulars ships with the package.

>>> count_syllables("water")
2
>>> count_syllables("table")
2
>>> count_syllables("the")
1
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from importlib import resources

import numpy as np

__all__ = [
    "Token",
    "SyllabifiedToken",
    "tokenize",
    "count_syllables",
    "syllabify_tokens",
    "syllabify_text",
    "load_lexicon",
    "builtin_lexicon",
    "normalize_word",
]

_VOWELS = frozenset("aeiouy")
_VOWEL_RUN = re.compile(r"[aeiouy]+")
# strip punctuation and symbols from token edges; keep letters and digits
_EDGE = re.compile(r"^[\W_]+|[\W_]+$", re.UNICODE)


@dataclass(frozen=True)
class Token:
    """A normalized word with its 1-based position in the text."""

    surface: str
    position: int


@dataclass(frozen=True)
class SyllabifiedToken:
    token: Token
    syllables: int


def normalize_word(raw: str) -> str:
    """Lowercase ``raw``, unify apostrophes, and strip edge punctuation.

    Internal apostrophes and hyphens survive; a chunk with no alphabetic
    character normalizes to the empty string.

    >>> normalize_word('"Stop!"')
    'stop'
    >>> normalize_word("Don’t")
    "don't"
    >>> normalize_word("--")
    ''
    """
    word = raw.replace("’", "'").replace("‘", "'")
    word = _EDGE.sub("", word)
    if not any(c.isalpha() for c in word):
        return ""
    return word.lower()


def tokenize(text: str) -> list[Token]:
    """Split ``text`` on whitespace into normalized tokens.

    Chunks that contain no alphabetic character (bare numbers, dashes,
    stray punctuation) are dropped.  Positions are consecutive from 1
    over the kept tokens.
    """
    tokens: list[Token] = []
    for chunk in text.split():
        surface = normalize_word(chunk)
        if surface:
            tokens.append(Token(surface, len(tokens) + 1))
    return tokens


def _heuristic(part: str) -> int:
    # vowel-group count with silent-e correction; clamped to >= 1
    letters = part.replace("'", "")
    groups = _VOWEL_RUN.findall(letters)
    n = len(groups)
    if n > 1 and letters.endswith("e") and letters[-2] not in _VOWELS:
        if letters[-2] == "l" and len(letters) >= 3 and letters[-3] not in _VOWELS:
            pass  # consonant + "le": the final e carries a syllable (ta-ble)
        else:
            n -= 1
    return max(n, 1)


def count_syllables(word: str, lexicon: dict[str, int] | None = None) -> int:
    """Count the syllables of one normalized word.

    The exception ``lexicon`` (word -> count) is consulted first, on the
    whole word only.  Hyphenated compounds are counted part by part and
    summed, so the ``-le`` and silent-e rules see each part's own ending.

    >>> count_syllables("syllable")
    3
    >>> count_syllables("twenty-two")
    3
    >>> count_syllables("cafe", lexicon={"cafe": 2})
    2
    """
    if not word:
        raise ValueError("cannot count syllables of an empty word")
    if lexicon:
        hit = lexicon.get(word)
        if hit is not None:
            return hit
    total = 0
    for part in word.split("-"):
        if any(c.isalpha() for c in part):
            total += _heuristic(part)
    return max(total, 1)


def syllabify_tokens(
    tokens: list[Token], lexicon: dict[str, int] | None = None
) -> list[SyllabifiedToken]:
    return [SyllabifiedToken(t, count_syllables(t.surface, lexicon)) for t in tokens]


def syllabify_text(text: str, lexicon: dict[str, int] | None = None) -> np.ndarray:
    """Turn raw text into the sequence of per-word syllable counts.

    >>> syllabify_text("the cat sat").tolist()
    [1, 1, 1]
    >>> syllabify_text("water water").tolist()
    [2, 2]
    """
    counts = [count_syllables(t.surface, lexicon) for t in tokenize(text)]
    return np.asarray(counts, dtype=np.int64)


def load_lexicon(source) -> dict[str, int]:
    """Parse an exception lexicon from a path or an open text file.

    Format: one ``word<TAB>count`` pair per line; blank lines and lines
    starting with ``#`` are skipped.  Keys are normalized exactly like
    tokens.  A duplicate key overrides the earlier entry and raises a
    ``UserWarning``.
    """
    if hasattr(source, "read"):
        return _parse_lexicon(source.read(), getattr(source, "name", "<lexicon>"))
    with open(source, encoding="utf-8") as fh:
        return _parse_lexicon(fh.read(), str(source))


def _parse_lexicon(content: str, origin: str) -> dict[str, int]:
    lexicon: dict[str, int] = {}
    for lineno, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"{origin}:{lineno}: expected 'word<TAB>count', got {line!r}")
        word = normalize_word(fields[0])
        if not word:
            raise ValueError(f"{origin}:{lineno}: {fields[0]!r} is not a word")
        try:
            count = int(fields[1])
        except ValueError:
            raise ValueError(f"{origin}:{lineno}: count {fields[1]!r} is not an integer") from None
        if count < 1:
            raise ValueError(f"{origin}:{lineno}: count must be >= 1, got {count}")
        if word in lexicon:
            warnings.warn(f"{origin}:{lineno}: duplicate lexicon entry {word!r}; keeping the later one")
        lexicon[word] = count
    return lexicon


def builtin_lexicon() -> dict[str, int]:
    """The exception lexicon shipped with the package."""
    content = resources.files("lineometer").joinpath("data/exceptions.tsv").read_text("utf-8")
    return _parse_lexicon(content, "exceptions.tsv")
