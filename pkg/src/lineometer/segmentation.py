"""Random-segmentation model of a syllable-count sequence.

Under random segmentation the probability that a word has S syllables is
geometric, P{S} = q (1-q)^(S-1), so the mean word length is s = 1/q and
the variance is delta = (1-q)/q^2.  Everything downstream measures how a
real sequence deviates from this null model.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_length_sequence

__all__ = [
    "SegmentationModel",
    "LengthHistogram",
    "ExcessRow",
    "fit_segmentation",
    "length_histogram",
    "excess_table",
]


@dataclass(frozen=True)
class SegmentationModel:
    """Geometric word-length model with success probability ``q``."""

    q: float
    s: float
    delta: float

    @classmethod
    def from_q(cls, q: float) -> "SegmentationModel":
        if not 0.0 < q <= 1.0:
            raise ValueError(f"q must lie in (0, 1], got {q}")
        q = float(q)
        return cls(q=q, s=1.0 / q, delta=(1.0 - q) / (q * q))

    @classmethod
    def from_mean(cls, s: float) -> "SegmentationModel":
        if s < 1.0:
            raise ValueError(f"mean syllable count must be >= 1, got {s}")
        return cls.from_q(1.0 / float(s))

    @classmethod
    def fit(cls, lengths) -> "SegmentationModel":
        arr = check_length_sequence(lengths)
        return cls.from_mean(float(arr.mean()))

    @property
    def sqrt_delta(self) -> float:
        return float(np.sqrt(self.delta))

    def pmf(self, s):
        """P{S = s} under the model; accepts a scalar or an array."""
        arr = np.asarray(s)
        if np.any(arr < 1) or np.any(arr != np.floor(arr)):
            raise ValueError("syllable counts must be integers >= 1")
        out = self.q * (1.0 - self.q) ** (arr - 1)
        return float(out) if np.isscalar(s) else out


def fit_segmentation(lengths) -> SegmentationModel:
    """Fit the geometric model by matching the sample mean (s = 1/q)."""
    return SegmentationModel.fit(lengths)


@dataclass(frozen=True)
class LengthHistogram:
    """Empirical word-length distribution: ``probabilities[s]`` = fraction of words."""

    probabilities: dict[int, float]
    counts: dict[int, int]
    k: int

    def probability(self, s: int) -> float:
        return self.probabilities.get(int(s), 0.0)


def length_histogram(lengths) -> LengthHistogram:
    arr = check_length_sequence(lengths)
    values, counts = np.unique(arr, return_counts=True)
    k = int(arr.size)
    return LengthHistogram(
        probabilities={int(v): int(c) / k for v, c in zip(values, counts)},
        counts={int(v): int(c) for v, c in zip(values, counts)},
        k=k,
    )


@dataclass(frozen=True)
class ExcessRow:
    s: int
    p_empirical: float
    p_model: float
    excess: float


def excess_table(
    histogram: LengthHistogram, model: SegmentationModel, s_max: int | None = None
) -> list[ExcessRow]:
    """Empirical minus model probability for each word length up to ``s_max``."""
    if s_max is None:
        s_max = max(histogram.probabilities)
    rows = []
    for s in range(1, int(s_max) + 1):
        emp = histogram.probability(s)
        mod = model.pmf(s)
        rows.append(ExcessRow(s=s, p_empirical=emp, p_model=mod, excess=emp - mod))
    return rows
