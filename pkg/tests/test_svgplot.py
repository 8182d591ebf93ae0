"""Tests for the SVG rendering of report series.

The plots are plain strings, so the checks are structural: every series
renders a well-formed SVG document, missing data raises with a helpful
message, and one frozen plot is compared byte for byte against a golden
file to catch accidental changes in layout or formatting.
"""

import xml.etree.ElementTree as ET

import pytest

from lineometer import analyze_lengths, isometric_lines, random_segmented, svgplot
from lineometer.report import AnalysisOptions
from lineometer.spectral import rank_distribution
from lineometer.svgplot import SERIES, from_report, rank_svg


@pytest.fixture(scope="module")
def null_report():
    lengths = random_segmented(0.75, 512, seed=20)
    return analyze_lengths(lengths, options=AnalysisOptions(baselines=0)).to_dict()


@pytest.fixture(scope="module")
def comb_report():
    lengths = isometric_lines(8, 600, q=0.5, seed=4)
    return analyze_lengths(lengths, options=AnalysisOptions(baselines=0)).to_dict()


class TestDocuments:
    @pytest.mark.parametrize("which", sorted(SERIES))
    def test_every_series_is_wellformed_svg(self, null_report, which):
        svg = from_report(null_report, which)
        assert svg.startswith("<svg")
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")
        assert root.attrib["width"] == "720"
        assert root.attrib["height"] == "420"

    def test_every_series_has_a_title(self, null_report):
        for which in SERIES:
            svg = from_report(null_report, which)
            root = ET.fromstring(svg)
            texts = [el.text for el in root.iter() if el.tag.endswith("text")]
            assert any(t for t in texts), which

    def test_unknown_kind_rejected(self, null_report):
        with pytest.raises(ValueError, match="unknown plot kind"):
            from_report(null_report, "sparkline")


class TestMissingData:
    def test_spectrum_needs_embedded_coefficients(self, null_report):
        trimmed = dict(null_report)
        trimmed["spectrum"] = {
            k: v for k, v in null_report["spectrum"].items() if k != "coefficients"
        }
        for which in ("spectrum", "rank"):
            with pytest.raises(ValueError, match="--full-spectrum"):
                from_report(trimmed, which)

    def test_degenerate_report_has_no_correlation_plot(self):
        report = analyze_lengths([2] * 500, options=AnalysisOptions(baselines=0)).to_dict()
        assert report["correlation"] is None
        with pytest.raises(ValueError, match="correlation"):
            from_report(report, "correlation")

    def test_empty_rank_distribution_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            rank_svg(rank_distribution([0.0, 0.0]), variance=1.0)


class TestContent:
    def test_qn_plot_marks_flags(self, comb_report):
        flags = comb_report["qn"]["flags"]
        assert flags, "comb corpus should produce boundary flags"
        svg = from_report(comb_report, "qn")
        assert svg.count("<circle") >= len(flags)

    def test_spectrum_thins_long_sequences(self):
        lengths = random_segmented(0.75, 20000, seed=9)
        report = analyze_lengths(
            lengths, options=AnalysisOptions(baselines=0, full_spectrum=True)
        ).to_dict()
        svg = from_report(report, "spectrum")
        assert "th point" in svg
        ET.fromstring(svg)

    def test_rank_plot_draws_gaussian_curve(self, null_report):
        svg = from_report(null_report, "rank")
        assert svg.count("<polyline") == 1
        assert svg.count("<circle") == null_report["spectrum"]["k"] // 2

    def test_rank_plot_matches_golden_file(self, null_report, data_dir):
        golden = (data_dir / "rank_golden.svg").read_text()
        assert from_report(null_report, "rank") == golden
