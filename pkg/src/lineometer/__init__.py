"""Statistical detection of hidden line structure in running text.

The package measures whether a stream of word syllable counts carries a
periodic segmentation signal.  Three instruments look at the same
sequence from different angles: a discrete Fourier spectrum of the
counts, a circular autocorrelation of the counts, and the probability
that two word boundaries sit an exact syllable distance apart.  All
three are calibrated against a memoryless segmentation model in which
each syllable ends a word independently with probability q.
"""

from ._version import __version__
from .boundary import (
    BoundaryProfile,
    BoundarySignificance,
    FlaggedPoint,
    HarmonicFamily,
    Q2Baseline,
    Q2DipReport,
    boundary_profile,
    boundary_run_counts,
    boundary_significance,
    geometric_q2_baseline,
    q2_dip,
    scan_peaks,
)
from .estimators import GeometricSegmentation, LineationDetector, SyllableCounter
from .generators import (
    GeneratorSpec,
    alternating,
    generate,
    isometric_lines,
    mixture,
    random_segmented,
)
from .report import (
    AnalysisOptions,
    AnalysisReport,
    analyze_file,
    analyze_lengths,
    analyze_text,
    render_json,
    render_text,
    write_csv,
)
from .segmentation import (
    ExcessRow,
    LengthHistogram,
    SegmentationModel,
    excess_table,
    fit_segmentation,
    length_histogram,
)
from .seqio import parse_lengths, read_lengths, read_text, write_lengths
from .spectral import (
    CorrelationProfile,
    DegenerateSequenceError,
    NyquistConventions,
    RankDistribution,
    SpectralPeak,
    Spectrum,
    circular_correlation,
    fourier_coefficients,
    gaussian_tail,
    nyquist_conventions,
    rank_distribution,
    significant_coefficients,
)
from .textprep import (
    SyllabifiedToken,
    Token,
    builtin_lexicon,
    count_syllables,
    load_lexicon,
    normalize_word,
    syllabify_text,
    syllabify_tokens,
    tokenize,
)

__all__ = [
    "__version__",
    "AnalysisOptions",
    "AnalysisReport",
    "BoundaryProfile",
    "BoundarySignificance",
    "CorrelationProfile",
    "DegenerateSequenceError",
    "ExcessRow",
    "FlaggedPoint",
    "GeneratorSpec",
    "GeometricSegmentation",
    "HarmonicFamily",
    "LengthHistogram",
    "LineationDetector",
    "NyquistConventions",
    "Q2Baseline",
    "Q2DipReport",
    "RankDistribution",
    "SegmentationModel",
    "SpectralPeak",
    "Spectrum",
    "SyllabifiedToken",
    "SyllableCounter",
    "Token",
    "alternating",
    "analyze_file",
    "analyze_lengths",
    "analyze_text",
    "boundary_profile",
    "boundary_run_counts",
    "boundary_significance",
    "builtin_lexicon",
    "circular_correlation",
    "count_syllables",
    "excess_table",
    "fit_segmentation",
    "fourier_coefficients",
    "gaussian_tail",
    "generate",
    "geometric_q2_baseline",
    "isometric_lines",
    "length_histogram",
    "load_lexicon",
    "mixture",
    "normalize_word",
    "nyquist_conventions",
    "parse_lengths",
    "q2_dip",
    "random_segmented",
    "rank_distribution",
    "read_lengths",
    "read_text",
    "render_json",
    "render_text",
    "scan_peaks",
    "significant_coefficients",
    "syllabify_text",
    "syllabify_tokens",
    "tokenize",
    "write_csv",
    "write_lengths",
]
