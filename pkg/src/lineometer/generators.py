"""Seeded generators for synthetic syllable-count sequences.

All randomness comes from numpy's PCG64, which gives a fixed, portable
stream for a given integer seed.  Geometric draws use the inverse
transform 1 + floor(log(1-U)/log(1-q)) so the mapping from the uniform
stream to word lengths is explicit and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "GeneratorSpec",
    "random_segmented",
    "isometric_lines",
    "alternating",
    "mixture",
    "generate",
]

_BATCH = 4096


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _geometric(rng: np.random.Generator, q: float, size: int) -> np.ndarray:
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q}")
    if q == 1.0:
        return np.ones(size, dtype=np.int64)
    u = rng.random(size)
    return (1.0 + np.floor(np.log1p(-u) / np.log1p(-q))).astype(np.int64)


def random_segmented(q: float, k: int, seed: int) -> np.ndarray:
    """K independent geometric word lengths: the random-segmentation null."""
    k = int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return _geometric(_rng(seed), q, k)


def isometric_lines(line_syllables: int, num_lines: int, q: float, seed: int) -> np.ndarray:
    """Lines of exactly ``line_syllables`` syllables each.

    Words are drawn geometrically in sequence; a word that would overrun
    the remaining budget of its line is truncated to fit, which leaves
    interior boundaries distributed exactly as in unconstrained drawing.
    """
    line_syllables = int(line_syllables)
    num_lines = int(num_lines)
    if line_syllables < 1:
        raise ValueError(f"line_syllables must be >= 1, got {line_syllables}")
    if num_lines < 1:
        raise ValueError(f"num_lines must be >= 1, got {num_lines}")
    rng = _rng(seed)
    out: list[int] = []
    buf: list[int] = []
    pos = 0
    for _ in range(num_lines):
        rem = line_syllables
        while rem > 0:
            if pos == len(buf):
                buf = _geometric(rng, q, _BATCH).tolist()
                pos = 0
            s = min(buf[pos], rem)
            pos += 1
            out.append(s)
            rem -= s
    return np.asarray(out, dtype=np.int64)


def alternating(k: int, long_mean: float, short_mean: float, seed: int) -> np.ndarray:
    """Odd positions geometric with mean ``long_mean``, even with ``short_mean``.

    Position numbering is 1-based, so the first word comes from the long
    distribution.  This plants a pure period-2 signal whose spectral
    footprint is a negative real Nyquist coefficient.
    """
    k = int(k)
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if short_mean < 1.0 or long_mean < short_mean:
        raise ValueError("means must satisfy long_mean >= short_mean >= 1")
    rng = _rng(seed)
    u = rng.random(k)
    out = np.empty(k, dtype=np.int64)
    for offset, mean in ((0, long_mean), (1, short_mean)):
        q = 1.0 / float(mean)
        if q == 1.0:
            out[offset::2] = 1
        else:
            out[offset::2] = (1.0 + np.floor(np.log1p(-u[offset::2]) / np.log1p(-q))).astype(
                np.int64
            )
    return out


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative description of a synthetic corpus.

    ``kind`` is one of ``geometric``, ``isometric``, ``alternating`` or
    ``mixture``; only the fields that kind uses need to be set.  A
    mixture nests a prose and a verse spec and uses its own seed solely
    for placing verse lines.
    """

    kind: str
    seed: int = 0
    q: float | None = None
    k: int | None = None
    line_syllables: int | None = None
    num_lines: int | None = None
    long_mean: float | None = None
    short_mean: float | None = None
    verse_fraction: float | None = None
    prose: "GeneratorSpec | None" = None
    verse: "GeneratorSpec | None" = None


def _require(spec: GeneratorSpec, *fields: str) -> None:
    missing = [f for f in fields if getattr(spec, f) is None]
    if missing:
        raise ValueError(f"{spec.kind} generator requires {', '.join(missing)}")


def mixture(
    prose: GeneratorSpec, verse: GeneratorSpec, verse_fraction: float, seed: int
) -> np.ndarray:
    """Interleave verse lines into prose at the given word fraction.

    The prose spec fixes the total word budget ``k``.  Whole verse lines
    are generated from the verse stream until they cover about
    ``verse_fraction * k`` words, the remaining words are prose, and the
    lines are spliced (in order) at uniformly drawn prose positions using
    the mixture's own seed.  Fraction 0 reproduces the prose generator
    output exactly; fraction 1 is pure verse.
    """
    if prose.kind != "geometric" or verse.kind != "isometric":
        raise ValueError("mixture expects a geometric prose spec and an isometric verse spec")
    _require(prose, "q", "k")
    _require(verse, "q", "line_syllables")
    if not 0.0 <= verse_fraction <= 1.0:
        raise ValueError(f"verse_fraction must lie in [0, 1], got {verse_fraction}")
    k_total = int(prose.k)
    target = round(verse_fraction * k_total)

    lines: list[np.ndarray] = []
    verse_words = 0
    if target > 0:
        rng = _rng(verse.seed)
        buf: list[int] = []
        pos = 0
        while verse_words < target:
            line: list[int] = []
            rem = int(verse.line_syllables)
            while rem > 0:
                if pos == len(buf):
                    buf = _geometric(rng, verse.q, _BATCH).tolist()
                    pos = 0
                s = min(buf[pos], rem)
                pos += 1
                line.append(s)
                rem -= s
            lines.append(np.asarray(line, dtype=np.int64))
            verse_words += len(line)

    prose_count = max(k_total - verse_words, 0)
    prose_words = random_segmented(prose.q, prose_count, prose.seed) if prose_count else np.empty(
        0, dtype=np.int64
    )
    if not lines:
        return prose_words

    placements = np.sort(_rng(seed).integers(0, prose_count + 1, size=len(lines)))
    pieces: list[np.ndarray] = []
    cursor = 0
    for where, line in zip(placements, lines):
        pieces.append(prose_words[cursor:where])
        pieces.append(line)
        cursor = where
    pieces.append(prose_words[cursor:])
    return np.concatenate(pieces)


def generate(spec: GeneratorSpec) -> np.ndarray:
    """Run the generator a spec describes."""
    if spec.kind == "geometric":
        _require(spec, "q", "k")
        return random_segmented(spec.q, spec.k, spec.seed)
    if spec.kind == "isometric":
        _require(spec, "line_syllables", "num_lines", "q")
        return isometric_lines(spec.line_syllables, spec.num_lines, spec.q, spec.seed)
    if spec.kind == "alternating":
        _require(spec, "k", "long_mean", "short_mean")
        return alternating(spec.k, spec.long_mean, spec.short_mean, spec.seed)
    if spec.kind == "mixture":
        if spec.prose is None or spec.verse is None or spec.verse_fraction is None:
            raise ValueError("mixture spec requires prose, verse and verse_fraction")
        return mixture(spec.prose, spec.verse, spec.verse_fraction, spec.seed)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
