"""Estimator-style wrappers around the functional pipeline.

The classes follow the familiar fit/transform conventions: parameters
are set in ``__init__`` and untouched by ``fit``, fitted state lands in
trailing-underscore attributes, ``fit`` returns ``self``, and
``get_params``/``set_params`` come from ``BaseEstimator`` so the objects
clone and grid-search cleanly.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_length_sequence
from .report import AnalysisOptions, analyze_lengths
from .segmentation import excess_table, fit_segmentation, length_histogram
from .textprep import builtin_lexicon, load_lexicon, syllabify_text

__all__ = ["SyllableCounter", "GeometricSegmentation", "LineationDetector"]


class SyllableCounter(TransformerMixin, BaseEstimator):
    """Turn documents into syllable-count sequences.

    Parameters
    ----------
    lexicon : dict, str or None
        Extra word -> syllable-count overrides, either as a mapping or a
        path to a lexicon file.
    use_builtin : bool
        Merge the packaged exception lexicon underneath the overrides.
    """

    def __init__(self, lexicon=None, use_builtin: bool = True):
        self.lexicon = lexicon
        self.use_builtin = use_builtin

    def fit(self, X=None, y=None):
        merged: dict[str, int] = builtin_lexicon() if self.use_builtin else {}
        if isinstance(self.lexicon, dict):
            merged.update(self.lexicon)
        elif self.lexicon is not None:
            merged.update(load_lexicon(self.lexicon))
        self.lexicon_ = merged
        return self

    def transform(self, X) -> list[np.ndarray]:
        """Map an iterable of document strings to int arrays of counts."""
        check_is_fitted(self, "lexicon_")
        if isinstance(X, str):
            raise ValueError("X must be an iterable of documents, not a single string")
        return [syllabify_text(doc, self.lexicon_) for doc in X]


class GeometricSegmentation(BaseEstimator):
    """Fit the geometric word-length model to a length sequence.

    Attributes
    ----------
    q_, s_, delta_ : float
        Model parameters (boundary probability, mean, variance).
    histogram_ : LengthHistogram
        Empirical word-length distribution of the training sequence.
    """

    def fit(self, X, y=None):
        arr = check_length_sequence(X)
        self.model_ = fit_segmentation(arr)
        self.q_ = self.model_.q
        self.s_ = self.model_.s
        self.delta_ = self.model_.delta
        self.histogram_ = length_histogram(arr)
        self.n_words_ = int(arr.size)
        return self

    def pmf(self, s):
        check_is_fitted(self, "model_")
        return self.model_.pmf(s)

    def excess_table(self, s_max: int | None = None):
        check_is_fitted(self, "model_")
        return excess_table(self.histogram_, self.model_, s_max)


class LineationDetector(BaseEstimator):
    """Detect periodic word-length structure in a syllable-count sequence.

    Parameters mirror :class:`lineometer.report.AnalysisOptions`.  After
    ``fit`` the full report is available as ``report_`` and the flagged
    line lengths as ``fundamentals_``.
    """

    def __init__(
        self,
        qn_max: int = 200,
        window: tuple[int, int] | None = None,
        threshold: float = 0.01,
        tail: str = "one",
        sigma: str = "robust",
        circular: bool = True,
        max_lag: int | None = 200,
        seed: int = 0,
        baselines: int = 12,
    ):
        self.qn_max = qn_max
        self.window = window
        self.threshold = threshold
        self.tail = tail
        self.sigma = sigma
        self.circular = circular
        self.max_lag = max_lag
        self.seed = seed
        self.baselines = baselines

    def fit(self, X, y=None):
        arr = check_length_sequence(X, min_length=2)
        options = AnalysisOptions(
            qn_max=self.qn_max,
            window=self.window,
            threshold=self.threshold,
            tail=self.tail,
            sigma=self.sigma,
            circular=self.circular,
            max_lag=self.max_lag,
            seed=self.seed,
            baselines=self.baselines,
        )
        report = analyze_lengths(arr, options=options)
        self.report_ = report
        self.model_ = report.model
        self.spectrum_ = report.spectrum
        self.spectral_peaks_ = report.spectral_peaks
        self.correlation_ = report.correlation
        self.profile_ = report.significance.profile
        self.significance_ = report.significance
        self.families_ = report.families
        self.fundamentals_ = sorted({f.fundamental for f in report.families})
        return self

    @property
    def detected_(self) -> bool:
        check_is_fitted(self, "report_")
        return bool(self.families_ or self.spectral_peaks_)

    def fit_predict(self, X, y=None) -> list[int]:
        """Fit and return the flagged fundamental periods (empty when clean)."""
        return self.fit(X).fundamentals_
