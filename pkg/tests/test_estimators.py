"""Tests for the estimator-style wrappers.

These classes are thin adapters over the functional pipeline, so the
tests focus on estimator hygiene (params survive cloning, fitted state
uses trailing underscores, unfitted use raises) plus one end-to-end
detection check per class.
"""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from lineometer import (
    GeometricSegmentation,
    LineationDetector,
    SyllableCounter,
    isometric_lines,
    random_segmented,
)


class TestSyllableCounter:
    def test_transform_counts_documents(self):
        counter = SyllableCounter().fit()
        out = counter.transform(["one two three", "seventeen"])
        assert [a.tolist() for a in out] == [[1, 1, 1], [3]]
        assert all(a.dtype == np.int64 for a in out)

    def test_single_string_rejected(self):
        counter = SyllableCounter().fit()
        with pytest.raises(ValueError, match="iterable of documents"):
            counter.transform("just one document")

    def test_unfitted_transform_raises(self):
        with pytest.raises(NotFittedError):
            SyllableCounter().transform(["text"])

    def test_lexicon_override_wins(self):
        plain = SyllableCounter().fit().transform(["poem"])[0]
        patched = SyllableCounter(lexicon={"poem": 7}).fit().transform(["poem"])[0]
        assert plain.tolist() == [2]
        assert patched.tolist() == [7]

    def test_builtin_can_be_disabled(self):
        bare = SyllableCounter(use_builtin=False).fit()
        assert bare.lexicon_ == {}
        assert bare.transform(["poem"])[0].tolist() == [1]

    def test_lexicon_path_accepted(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("zyzzyva\t4\n")
        counter = SyllableCounter(lexicon=path).fit()
        assert counter.lexicon_["zyzzyva"] == 4

    def test_clone_preserves_params(self):
        counter = SyllableCounter(lexicon={"a": 2}, use_builtin=False)
        twin = clone(counter)
        assert twin.get_params() == counter.get_params()
        with pytest.raises(NotFittedError):
            twin.transform(["a"])


class TestGeometricSegmentation:
    def test_fit_exposes_model_parameters(self):
        lengths = random_segmented(0.6, 20000, seed=1)
        seg = GeometricSegmentation().fit(lengths)
        assert seg.q_ == pytest.approx(1.0 / np.mean(lengths))
        assert seg.s_ == pytest.approx(np.mean(lengths))
        assert seg.delta_ == pytest.approx((1 - seg.q_) / seg.q_**2)
        assert seg.n_words_ == 20000

    def test_pmf_and_excess_table_need_fit(self):
        seg = GeometricSegmentation()
        with pytest.raises(NotFittedError):
            seg.pmf(1)
        with pytest.raises(NotFittedError):
            seg.excess_table()

    def test_excess_table_rows_cover_observed_lengths(self):
        lengths = random_segmented(0.7, 5000, seed=2)
        seg = GeometricSegmentation().fit(lengths)
        rows = seg.excess_table()
        assert rows[0].s == 1
        assert rows[-1].s == int(np.max(lengths))
        assert seg.pmf(1) == pytest.approx(seg.q_)

    def test_fit_returns_self(self):
        seg = GeometricSegmentation()
        assert seg.fit([1, 2, 3, 1, 2]) is seg


class TestLineationDetector:
    def test_detects_isometric_fundamental(self):
        lengths = isometric_lines(8, 3000, q=0.5, seed=7)
        det = LineationDetector(seed=0, baselines=0).fit(lengths)
        assert det.detected_
        assert 8 in det.fundamentals_
        assert det.report_.to_dict()["qn"]["flags"]

    def test_clean_null_detects_nothing(self):
        lengths = random_segmented(0.77, 100000, seed=3)
        det = LineationDetector(seed=0, baselines=0)
        assert det.fit_predict(lengths) == []
        assert not det.detected_
        assert det.spectral_peaks_ == []

    def test_fit_predict_matches_fundamentals(self):
        lengths = isometric_lines(6, 2000, q=0.5, seed=5)
        det = LineationDetector(baselines=0)
        assert det.fit_predict(lengths) == det.fundamentals_

    def test_unfitted_access_raises(self):
        det = LineationDetector()
        with pytest.raises(NotFittedError):
            det.detected_

    def test_clone_and_params_round_trip(self):
        det = LineationDetector(qn_max=64, threshold=0.005, tail="two", sigma="paper")
        twin = clone(det)
        assert twin.get_params() == det.get_params()
        assert twin.get_params()["qn_max"] == 64
        reset = twin.set_params(qn_max=32)
        assert reset is twin
        assert twin.qn_max == 32

    def test_window_narrows_flags(self):
        lengths = isometric_lines(8, 3000, q=0.5, seed=7)
        det = LineationDetector(window=(2, 7), baselines=0).fit(lengths)
        assert 8 not in {f.n for f in det.significance_.flagged}

    def test_fit_rejects_bad_input(self):
        det = LineationDetector()
        with pytest.raises(ValueError):
            det.fit([1, 0, 2])
