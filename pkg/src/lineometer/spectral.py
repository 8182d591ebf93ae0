"""Fourier analysis of a syllable-count sequence against the white-noise null.

Coefficients follow the unitary convention with the sum taken over word
positions k = 1..K:

    C_m = K^(-1/2) * sum_k S_k exp(-2 pi i m k / K)

so C_0 = sqrt(K) * s and C_{K-m} is the conjugate of C_m.  For a randomly
segmented sequence every other coefficient is zero-mean noise with
E{|C_m|^2} = delta, i.e. variance delta/2 per real/imaginary component,
and variance delta for the purely real Nyquist coefficient at m = K/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import erfc

from ._validation import check_length_sequence, check_probability
from .segmentation import SegmentationModel, fit_segmentation

__all__ = [
    "DegenerateSequenceError",
    "Spectrum",
    "SpectralPeak",
    "NyquistConventions",
    "CorrelationProfile",
    "RankDistribution",
    "fourier_coefficients",
    "gaussian_tail",
    "significant_coefficients",
    "nyquist_conventions",
    "rank_distribution",
    "circular_correlation",
]


class DegenerateSequenceError(ValueError):
    """Raised when a statistic is undefined because the sequence is constant."""


@dataclass(frozen=True)
class Spectrum:
    """DFT coefficients of a length sequence plus the fitted null model."""

    coefficients: np.ndarray
    k: int
    model: SegmentationModel

    @property
    def nyquist(self) -> complex | None:
        """The m = K/2 coefficient, or None when K is odd."""
        if self.k % 2:
            return None
        return complex(self.coefficients[self.k // 2])


def fourier_coefficients(lengths, model: SegmentationModel | None = None) -> Spectrum:
    """Compute the spectrum of a length sequence (K >= 2).

    The phase factor exp(-2 pi i m / K) shifts numpy's 0-based transform
    onto the 1-based word index, so signs of individual coefficients are
    comparable across implementations of the same convention.
    """
    arr = check_length_sequence(lengths, min_length=2)
    k = arr.size
    if model is None:
        model = fit_segmentation(arr)
    phase = np.exp(-2j * np.pi * np.arange(k) / k)
    coeff = np.fft.fft(arr.astype(np.float64)) * phase / math.sqrt(k)
    return Spectrum(coefficients=coeff, k=k, model=model)


def gaussian_tail(x: float, mean: float = 0.0, variance: float = 1.0) -> float:
    """Upper-tail probability P{X >= x} for X ~ N(mean, variance)."""
    if variance <= 0.0:
        raise ValueError(f"variance must be positive, got {variance}")
    z = (float(x) - float(mean)) / math.sqrt(2.0 * float(variance))
    return 0.5 * math.erfc(z)


@dataclass(frozen=True)
class SpectralPeak:
    """One flagged coefficient component."""

    m: int
    component: str  # "real" or "imag"
    value: float
    period: float  # K / m, in words
    z: float
    tail_probability: float
    expected_count: float


def _tail(z_abs: np.ndarray) -> np.ndarray:
    return 0.5 * erfc(z_abs / math.sqrt(2.0))


def significant_coefficients(
    spectrum: Spectrum, threshold: float = 0.01, tail: str = "one"
) -> list[SpectralPeak]:
    """Flag coefficient components that white noise would not produce.

    Each of the K-1 independent components (real parts for m = 1..K//2,
    imaginary parts for m = 1..ceil(K/2)-1) is z-scored against its null
    variance.  A component is flagged when the expected number of equally
    extreme components in the whole spectrum falls below ``threshold``.
    With ``tail="one"`` the reported p is the single-tail probability and
    the comparison count doubles, so the flag set does not depend on the
    tail convention.
    """
    check_probability(threshold, "threshold")
    if tail not in ("one", "two"):
        raise ValueError(f"tail must be 'one' or 'two', got {tail!r}")
    k = spectrum.k
    delta = spectrum.model.delta
    if delta <= 0.0:
        return []  # constant sequence: no fluctuation scale to test against
    coeff = spectrum.coefficients
    half = k // 2

    ms: list[int] = []
    comps: list[str] = []
    values: list[float] = []
    sigmas: list[float] = []
    for m in range(1, half + 1):
        ms.append(m)
        comps.append("real")
        values.append(float(coeff[m].real))
        at_nyquist = (k % 2 == 0) and m == half
        sigmas.append(math.sqrt(delta if at_nyquist else delta / 2.0))
    for m in range(1, (k - 1) // 2 + 1):
        ms.append(m)
        comps.append("imag")
        values.append(float(coeff[m].imag))
        sigmas.append(math.sqrt(delta / 2.0))

    vals = np.asarray(values)
    z = vals / np.asarray(sigmas)
    p_one = _tail(np.abs(z))
    n_comparisons = (k - 1) * (2 if tail == "one" else 1)
    p_reported = p_one if tail == "one" else 2.0 * p_one
    expected = p_reported * n_comparisons

    peaks = [
        SpectralPeak(
            m=ms[i],
            component=comps[i],
            value=vals[i],
            period=k / ms[i],
            z=float(z[i]),
            tail_probability=float(p_reported[i]),
            expected_count=float(expected[i]),
        )
        for i in np.flatnonzero(expected < threshold)
    ]
    peaks.sort(key=lambda p: p.expected_count)
    return peaks


@dataclass(frozen=True)
class NyquistConventions:
    """Significance of the Nyquist coefficient under every tail/variance convention.

    The same observed value leads to wildly different quoted numbers
    depending on whether the component variance is taken as delta/2 or
    delta and whether the tail is one- or two-sided, so all four are
    reported side by side.  Expected counts multiply the tail probability
    by K/2, the number of independent real-part values.
    """

    value: float
    k: int
    delta: float
    one_sided_half_variance: float
    two_sided_half_variance: float
    one_sided_full_variance: float
    two_sided_full_variance: float
    expected_count_one_sided_half_variance: float
    expected_count_two_sided_half_variance: float
    expected_count_one_sided_full_variance: float
    expected_count_two_sided_full_variance: float
    note: str = field(
        default=(
            "For a real white-noise sequence the Nyquist coefficient is purely "
            "real with variance delta; the half-variance column applies the "
            "interior-coefficient convention (variance delta/2 per component) "
            "to the Nyquist point as well. Expected counts are tail "
            "probability times K/2."
        )
    )


def nyquist_conventions(value: float, k: int, delta: float) -> NyquistConventions:
    if k < 2 or k % 2:
        raise ValueError(f"the Nyquist coefficient requires even K >= 2, got K={k}")
    if delta <= 0.0:
        raise ValueError(f"delta must be positive, got {delta}")
    a = abs(float(value))
    p1_half = gaussian_tail(a, 0.0, delta / 2.0)
    p1_full = gaussian_tail(a, 0.0, delta)
    n = k / 2.0
    return NyquistConventions(
        value=float(value),
        k=int(k),
        delta=float(delta),
        one_sided_half_variance=p1_half,
        two_sided_half_variance=2.0 * p1_half,
        one_sided_full_variance=p1_full,
        two_sided_full_variance=2.0 * p1_full,
        expected_count_one_sided_half_variance=p1_half * n,
        expected_count_two_sided_half_variance=2.0 * p1_half * n,
        expected_count_one_sided_full_variance=p1_full * n,
        expected_count_two_sided_full_variance=2.0 * p1_full * n,
    )


@dataclass(frozen=True)
class RankDistribution:
    """Rank/total pairs approximating the accumulated probability P{X >= x}.

    ``positive`` holds (value, rank/positive-count) with values sorted
    descending; ``negative`` treats negative values symmetrically on
    their absolute value.
    """

    positive: list[tuple[float, float]]
    negative: list[tuple[float, float]]


def rank_distribution(values) -> RankDistribution:
    arr = np.asarray(values, dtype=np.float64).ravel()
    pos = np.sort(arr[arr > 0])[::-1]
    neg = np.sort(-arr[arr < 0])[::-1]
    return RankDistribution(
        positive=[(float(v), (i + 1) / pos.size) for i, v in enumerate(pos)],
        negative=[(float(v), (i + 1) / neg.size) for i, v in enumerate(neg)],
    )


@dataclass(frozen=True)
class CorrelationProfile:
    """Normalized circular autocorrelation of the length sequence.

    ``values[l]`` is the lag-l correlation of deviations from the mean;
    ``values[0]`` is exactly 1.  Under random segmentation every other
    lag is zero-mean noise of scale 1/sqrt(K).
    """

    values: np.ndarray
    k: int

    @property
    def max_lag(self) -> int:
        return len(self.values) - 1


def circular_correlation(lengths, max_lag: int | None = None) -> CorrelationProfile:
    arr = check_length_sequence(lengths, min_length=2).astype(np.float64)
    k = arr.size
    if max_lag is None:
        max_lag = min(200, k - 1)
    max_lag = int(max_lag)
    if not 0 <= max_lag < k:
        raise ValueError(f"max_lag must lie in [0, K-1], got {max_lag}")
    d = arr - arr.mean()
    den = float(d @ d)
    if den == 0.0:
        raise DegenerateSequenceError(
            "correlation is undefined for a constant length sequence (zero variance)"
        )
    values = np.empty(max_lag + 1)
    values[0] = 1.0
    for lag in range(1, max_lag + 1):
        values[lag] = float(d @ np.roll(d, -lag)) / den
    return CorrelationProfile(values=values, k=k)
