"""Whole-pipeline analysis of one input and report serialization.

An :class:`AnalysisReport` bundles the fitted null model, the length
histogram with its excess table, spectral peaks with the Nyquist
convention grid, the circular correlation profile, the boundary
correlation profile with significance and harmonic families, and the
n = 2 enrichment check.  Reports serialize to human text, JSON, or a set
of per-series CSV files, and every convention in force is echoed so the
numbers can be compared honestly against other implementations.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._validation import check_length_sequence
from ._version import __version__
from .boundary import (
    BoundarySignificance,
    HarmonicFamily,
    Q2DipReport,
    boundary_profile,
    boundary_significance,
    geometric_q2_baseline,
    q2_dip,
    scan_peaks,
)
from .segmentation import (
    ExcessRow,
    LengthHistogram,
    SegmentationModel,
    excess_table,
    fit_segmentation,
    length_histogram,
)
from .seqio import looks_like_lengths, parse_lengths, read_text
from .spectral import (
    CorrelationProfile,
    DegenerateSequenceError,
    NyquistConventions,
    SpectralPeak,
    Spectrum,
    circular_correlation,
    fourier_coefficients,
    nyquist_conventions,
    rank_distribution,
    significant_coefficients,
)
from .textprep import builtin_lexicon, syllabify_text

__all__ = [
    "AnalysisOptions",
    "AnalysisReport",
    "analyze_lengths",
    "analyze_text",
    "analyze_file",
    "render_text",
    "render_json",
    "write_csv",
]

SYLLABIFICATION_NOTE = (
    "rule-based vowel-group counting; contractions counted as spelled; "
    "hyphenated compounds summed part by part; exception lexicon consulted first"
)


@dataclass(frozen=True)
class AnalysisOptions:
    """Everything that can change the numbers in a report."""

    lexicon: dict[str, int] | None = None
    lexicon_name: str | None = None
    input_kind: str = "auto"  # auto | text | lengths
    split: str | None = None  # regex splitting raw text into sections
    qn_max: int = 200
    window: tuple[int, int] | None = None
    threshold: float = 0.01
    tail: str = "one"
    sigma: str = "robust"
    circular: bool = True
    max_lag: int | None = 200
    seed: int = 0
    baselines: int = 12
    full_spectrum: bool = False
    spectrum_embed_limit: int = 16384


@dataclass(frozen=True)
class AnalysisReport:
    source: dict
    conventions: dict
    model: SegmentationModel
    empirical_variance: float
    histogram: LengthHistogram
    excess: list[ExcessRow]
    spectrum: Spectrum
    spectral_peaks: list[SpectralPeak]
    nyquist: NyquistConventions | None
    correlation: CorrelationProfile | None
    significance: BoundarySignificance
    families: list[HarmonicFamily]
    dip: Q2DipReport | None
    notices: list[str]
    embed_spectrum: bool = field(default=False, repr=False)

    def to_dict(self) -> dict:
        sig = self.significance
        prof = sig.profile
        out: dict = {
            "tool": {"name": "lineometer", "version": __version__},
            "source": dict(self.source),
            "conventions": dict(self.conventions),
            "model": {
                "s": self.model.s,
                "q": self.model.q,
                "delta": self.model.delta,
                "sqrt_delta": self.model.sqrt_delta,
                "empirical_variance": self.empirical_variance,
            },
            "histogram": {
                "probabilities": {str(s): p for s, p in sorted(self.histogram.probabilities.items())},
                "counts": {str(s): c for s, c in sorted(self.histogram.counts.items())},
                "excess": [
                    {"s": r.s, "p_empirical": r.p_empirical, "p_model": r.p_model, "excess": r.excess}
                    for r in self.excess
                ],
            },
            "spectrum": {
                "k": self.spectrum.k,
                "c0": float(self.spectrum.coefficients[0].real),
                "peaks": [
                    {
                        "m": p.m,
                        "component": p.component,
                        "value": p.value,
                        "period": p.period,
                        "z": p.z,
                        "tail_probability": p.tail_probability,
                        "expected_count": p.expected_count,
                    }
                    for p in self.spectral_peaks
                ],
                "nyquist": None
                if self.nyquist is None
                else {
                    "value": self.nyquist.value,
                    "one_sided_half_variance": self.nyquist.one_sided_half_variance,
                    "two_sided_half_variance": self.nyquist.two_sided_half_variance,
                    "one_sided_full_variance": self.nyquist.one_sided_full_variance,
                    "two_sided_full_variance": self.nyquist.two_sided_full_variance,
                    "expected_count_one_sided_half_variance": self.nyquist.expected_count_one_sided_half_variance,
                    "expected_count_two_sided_half_variance": self.nyquist.expected_count_two_sided_half_variance,
                    "expected_count_one_sided_full_variance": self.nyquist.expected_count_one_sided_full_variance,
                    "expected_count_two_sided_full_variance": self.nyquist.expected_count_two_sided_full_variance,
                    "note": self.nyquist.note,
                },
            },
            "correlation": None
            if self.correlation is None
            else {
                "max_lag": self.correlation.max_lag,
                "values": [float(v) for v in self.correlation.values],
            },
            "qn": {
                "n_max": prof.n_max,
                "circular": prof.circular,
                "values": [float(v) for v in prof.values],
                "window": list(sig.window),
                "mean": sig.mean,
                "sigma": sig.sigma,
                "scale": sig.scale,
                "sigma_robust": sig.sigma_robust,
                "sigma_conventional": sig.sigma_conventional,
                "sigma_paper": sig.sigma_paper,
                "degenerate": sig.degenerate,
                "z": [float(v) for v in sig.z],
                "flags": [
                    {
                        "n": f.n,
                        "value": f.value,
                        "z": f.z,
                        "tail_probability": f.tail_probability,
                        "expected_count": f.expected_count,
                    }
                    for f in sig.flagged
                ],
                "families": [
                    {
                        "fundamental": fam.fundamental,
                        "members": list(fam.members),
                        "missing": list(fam.missing),
                        "isolated": fam.isolated,
                    }
                    for fam in self.families
                ],
            },
            "q2_dip": None
            if self.dip is None
            else {
                "q2": self.dip.q2,
                "baseline_mean": self.dip.baseline_mean,
                "baseline_std": self.dip.baseline_std,
                "deviation": self.dip.deviation,
                "error": self.dip.error,
                "z": self.dip.z,
                "n_seeds": self.dip.n_seeds,
            },
            "notices": list(self.notices),
        }
        if self.embed_spectrum:
            out["spectrum"]["coefficients"] = {
                "re": [float(v) for v in self.spectrum.coefficients.real],
                "im": [float(v) for v in self.spectrum.coefficients.imag],
            }
        return out


def _conventions(options: AnalysisOptions, window: tuple[int, int]) -> dict:
    return {
        "qn_max": options.qn_max,
        "window": list(window),
        "threshold": options.threshold,
        "tail": options.tail,
        "sigma": options.sigma,
        "circular": options.circular,
        "max_lag": options.max_lag,
        "seed": options.seed,
        "baselines": options.baselines,
        "lexicon": options.lexicon_name,
        "syllabification": SYLLABIFICATION_NOTE,
    }


def analyze_lengths(
    lengths, source: dict | None = None, options: AnalysisOptions = AnalysisOptions()
) -> AnalysisReport:
    """Run the full pipeline on a syllable-count sequence."""
    arr = check_length_sequence(lengths, min_length=2)
    notices: list[str] = []

    model = fit_segmentation(arr)
    hist = length_histogram(arr)
    excess = excess_table(hist, model)

    if np.all(arr == arr[0]):
        notices.append(
            f"degenerate-constant: every word has {int(arr[0])} syllables; "
            "the spectrum and correlation carry no information"
        )

    spectrum = fourier_coefficients(arr, model)
    if model.delta <= 0.0:
        peaks: list[SpectralPeak] = []
        nyq = None
    else:
        peaks = significant_coefficients(spectrum, threshold=options.threshold, tail=options.tail)
        nyq = (
            nyquist_conventions(spectrum.nyquist.real, spectrum.k, model.delta)
            if spectrum.k % 2 == 0
            else None
        )

    correlation: CorrelationProfile | None
    try:
        correlation = circular_correlation(arr, min(options.max_lag, arr.size - 1))
    except DegenerateSequenceError:
        correlation = None

    n_max = min(options.qn_max, max(int(arr.sum()) - 1, 1)) if options.circular else options.qn_max
    if n_max < 2:
        raise ValueError("sequence too short to analyze: need at least 3 syllables")
    if n_max < options.qn_max:
        notices.append(f"qn_max reduced to {n_max}: the text has only {int(arr.sum())} syllables")
    profile = boundary_profile(arr, n_max=n_max, circular=options.circular)
    window = options.window if options.window is not None else (1, n_max)
    sig = boundary_significance(
        profile,
        window=window,
        threshold=options.threshold,
        scale=options.sigma,
        tail=options.tail,
    )
    if sig.degenerate:
        notices.append("degenerate-flat: the boundary profile is constant over the window; nothing to flag")
    families = scan_peaks(sig)

    dip = None
    if options.baselines >= 2 and n_max >= 2:
        seeds = [int(s) for s in np.random.SeedSequence(options.seed).generate_state(options.baselines)]
        baseline = geometric_q2_baseline(model.q, arr.size, seeds)
        dip = q2_dip(profile, model, baseline)

    src = dict(source or {})
    src.setdefault("words", int(arr.size))
    src.setdefault("syllables", int(arr.sum()))

    return AnalysisReport(
        source=src,
        conventions=_conventions(options, sig.window),
        model=model,
        empirical_variance=float(np.var(arr)),
        histogram=hist,
        excess=excess,
        spectrum=spectrum,
        spectral_peaks=peaks,
        nyquist=nyq,
        correlation=correlation,
        significance=sig,
        families=families,
        dip=dip,
        notices=notices,
        embed_spectrum=options.full_spectrum or spectrum.k <= options.spectrum_embed_limit,
    )


def analyze_text(
    text: str, source: dict | None = None, options: AnalysisOptions = AnalysisOptions()
) -> AnalysisReport:
    """Syllabify raw text and analyze the resulting length sequence.

    When ``options.lexicon`` is None the packaged exception lexicon is
    used; pass an empty dict to run the bare heuristic.
    """
    lexicon = builtin_lexicon() if options.lexicon is None else options.lexicon
    lengths = syllabify_text(text, lexicon)
    if lengths.size == 0:
        raise ValueError("no words found in the text")
    if lengths.size < 2:
        raise ValueError("need at least two words to analyze")
    return analyze_lengths(lengths, source=source, options=options)


def analyze_file(path, options: AnalysisOptions = AnalysisOptions()) -> list[AnalysisReport]:
    """Analyze one file, returning one report per section.

    Raw text yields a single report unless ``options.split`` names a
    regex, in which case each nonempty section becomes its own report.
    A file whose non-comment content is entirely positive integers is
    treated as a pre-syllabified length sequence (override with
    ``options.input_kind``).
    """
    content = read_text(path)
    kind = options.input_kind
    if kind == "auto":
        kind = "lengths" if looks_like_lengths(content) else "text"
    if kind == "lengths":
        arr = parse_lengths(content, origin=str(path))
        if arr.size < 2:
            raise ValueError(f"{path}: need at least two words to analyze")
        return [
            analyze_lengths(arr, source={"path": str(path), "input": "lengths"}, options=options)
        ]
    if kind != "text":
        raise ValueError(f"input kind must be auto, text or lengths, got {kind!r}")
    if options.split:
        # multiline so ^ and $ anchor section delimiters at line boundaries
        sections = [s for s in re.split(options.split, content, flags=re.MULTILINE) if s.strip()]
        if not sections:
            raise ValueError(f"{path}: splitting on {options.split!r} left no text")
    else:
        sections = [content]
    reports = []
    for index, section in enumerate(sections, start=1):
        source = {"path": str(path), "input": "text"}
        if options.split:
            source["section"] = index
        reports.append(analyze_text(section, source=source, options=options))
    return reports


# ---------------------------------------------------------------------------
# rendering


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_text(report: AnalysisReport) -> str:
    lines: list[str] = []
    src = report.source
    lines.append(f"lineometer {__version__}")
    name = src.get("path", "<sequence>")
    if "section" in src:
        name = f"{name}#{src['section']}"
    lines.append(f"source: {name} ({src.get('input', 'lengths')}, {src['words']} words, {src['syllables']} syllables)")
    m = report.model
    lines.append(
        f"model: s={_fmt(m.s)} q={_fmt(m.q)} delta={_fmt(m.delta)} sqrt_delta={_fmt(m.sqrt_delta)}"
        f" empirical_variance={_fmt(report.empirical_variance)}"
    )
    lines.append("length histogram (s: observed / model / excess):")
    for row in report.excess[:10]:
        lines.append(
            f"  {row.s}: {_fmt(row.p_empirical)} / {_fmt(row.p_model)} / {row.excess:+.6g}"
        )
    lines.append(f"spectral peaks ({len(report.spectral_peaks)} flagged):")
    for p in report.spectral_peaks[:10]:
        lines.append(
            f"  m={p.m} ({p.component}) value={_fmt(p.value)} period={_fmt(p.period)}"
            f" z={_fmt(p.z)} p={_fmt(p.tail_probability)} expected={_fmt(p.expected_count)}"
        )
    if report.nyquist is not None:
        ny = report.nyquist
        lines.append(
            f"nyquist coefficient: value={_fmt(ny.value)}"
            f" p(one-sided, var=delta)={_fmt(ny.one_sided_full_variance)}"
            f" p(one-sided, var=delta/2)={_fmt(ny.one_sided_half_variance)}"
            f" p(two-sided, var=delta/2)={_fmt(ny.two_sided_half_variance)}"
        )
        lines.append(
            f"  expected counts x K/2: one-sided half-variance={_fmt(ny.expected_count_one_sided_half_variance)}"
            f" two-sided half-variance={_fmt(ny.expected_count_two_sided_half_variance)}"
        )
    if report.correlation is not None:
        g = report.correlation.values
        if len(g) > 1:
            lag = int(np.argmax(np.abs(g[1:]))) + 1
            big = int(np.sum(np.abs(g[1:]) > 4.0 / np.sqrt(report.correlation.k)))
            lines.append(
                f"correlation: max |G| beyond lag 0 is {_fmt(g[lag])} at lag {lag};"
                f" {big} lag(s) beyond 4/sqrt(K)"
            )
    sig = report.significance
    lines.append(
        f"boundary profile: window {sig.window[0]}..{sig.window[1]} mean={_fmt(sig.mean)}"
        f" sigma[{sig.scale}]={_fmt(sig.sigma)}"
        f" (robust={_fmt(sig.sigma_robust)} conventional={_fmt(sig.sigma_conventional)}"
        f" paper={_fmt(sig.sigma_paper)})"
    )
    if sig.flagged:
        lines.append(f"boundary flags ({len(sig.flagged)}):")
        for f in sig.flagged:
            lines.append(
                f"  n={f.n} value={_fmt(f.value)} z={_fmt(f.z)} p={_fmt(f.tail_probability)}"
                f" expected={_fmt(f.expected_count)}"
            )
    else:
        lines.append("boundary flags: none")
    if report.families:
        for fam in report.families:
            kind = "isolated peak" if fam.isolated else "harmonic family"
            missing = f" missing={','.join(map(str, fam.missing))}" if fam.missing else ""
            lines.append(
                f"  {kind}: fundamental={fam.fundamental}"
                f" members={','.join(map(str, fam.members))}{missing}"
            )
    if report.dip is not None:
        d = report.dip
        lines.append(
            f"n=2 enrichment: value={_fmt(d.q2)} baseline={_fmt(d.baseline_mean)}"
            f" deviation={d.deviation:+.6g} +- {_fmt(d.error)} (z={_fmt(d.z)}, {d.n_seeds} seeds)"
        )
    for notice in report.notices:
        lines.append(f"notice: {notice}")
    return "\n".join(lines) + "\n"


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def write_csv(report: AnalysisReport, directory, stem: str) -> list[str]:
    """Write the per-series CSV files for one report; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written: list[str] = []

    def _emit(name: str, header: list[str], rows) -> None:
        path = directory / f"{stem}.{name}.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
        written.append(str(path))

    _emit(
        "histogram",
        ["s", "count", "probability", "model_probability", "excess"],
        [
            [r.s, report.histogram.counts.get(r.s, 0), r.p_empirical, r.p_model, r.excess]
            for r in report.excess
        ],
    )
    coeff = report.spectrum.coefficients
    _emit(
        "spectrum",
        ["m", "re", "im"],
        [[m, float(coeff[m].real), float(coeff[m].imag)] for m in range(report.spectrum.k)],
    )
    if report.correlation is not None:
        _emit(
            "correlation",
            ["lag", "g"],
            [[lag, float(v)] for lag, v in enumerate(report.correlation.values)],
        )
    sig = report.significance
    _emit(
        "qn",
        ["n", "q_n", "z", "tail_probability"],
        [
            [n, float(sig.profile.values[n - 1]), float(sig.z[n - 1]), float(sig.tail_probabilities[n - 1])]
            for n in range(1, sig.profile.n_max + 1)
        ],
    )
    return written


def spectral_rank(report: AnalysisReport):
    """Rank distribution of the real coefficient parts (plot support)."""
    half = report.spectrum.k // 2
    re = report.spectrum.coefficients.real[1 : half + 1]
    return rank_distribution(re)
