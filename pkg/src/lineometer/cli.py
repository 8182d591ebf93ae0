"""Command line interface.

Verbs: ``analyze`` one or more text or length-sequence files, ``generate``
synthetic corpora, ``plot`` a stored JSON report as SVG, and ``calibrate``
the false-positive rate of the detectors on null corpora.

Exit status: 0 on success, 1 on input errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from ._version import __version__
from . import generators, svgplot
from .boundary import boundary_profile, boundary_significance
from .report import AnalysisOptions, analyze_file, render_json, render_text, write_csv
from .segmentation import fit_segmentation
from .seqio import write_lengths
from .spectral import fourier_coefficients, significant_coefficients
from .textprep import builtin_lexicon, load_lexicon

LEXICON_ENV = "LINEOMETER_LEXICON"


def _window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in A..B, got {text!r}") from None


def _bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lineometer", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"lineometer {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze text or length-sequence files")
    pa.add_argument("paths", nargs="+", metavar="PATH")
    pa.add_argument("--input", choices=("auto", "text", "lengths"), default="auto",
                    help="how to read the files (default: sniff)")
    pa.add_argument("--lexicon", metavar="PATH",
                    default=os.environ.get(LEXICON_ENV),
                    help=f"extra exception lexicon merged over the built-in one (default: ${LEXICON_ENV})")
    pa.add_argument("--no-builtin-lexicon", action="store_true",
                    help="do not load the packaged exception lexicon")
    pa.add_argument("--split", metavar="REGEX",
                    help="split raw text on this regex and analyze each section separately")
    pa.add_argument("--qn-max", type=int, default=200, metavar="N",
                    help="longest boundary-profile distance in syllables (default 200)")
    pa.add_argument("--window", type=_window, metavar="A..B",
                    help="profile window used for the mean and dispersion (default 1..qn-max)")
    pa.add_argument("--threshold", type=float, default=0.01, metavar="P",
                    help="flag when the expected count of equal extremes is below P (default 0.01)")
    pa.add_argument("--tail", choices=("one", "two"), default="one",
                    help="tail convention for reported probabilities (default one)")
    pa.add_argument("--sigma", choices=("robust", "conventional", "paper"), default="robust",
                    help="dispersion estimate for profile z-scores: robust = scaled median absolute"
                         " deviation, conventional = root mean squared deviation, paper = root sum"
                         " of squares divided by the window size (default robust)")
    pa.add_argument("--circular", type=_bool, default=True, metavar="BOOL",
                    help="count boundary distances modulo the total syllable count (default true)")
    pa.add_argument("--max-lag", type=int, default=200, metavar="L",
                    help="largest lag of the length correlation profile (default 200)")
    pa.add_argument("--seed", type=_seed, default=0,
                    help="seed for the n=2 enrichment baselines (default 0)")
    pa.add_argument("--baselines", type=int, default=12, metavar="N",
                    help="number of null corpora behind the n=2 error bar; 0 disables (default 12)")
    pa.add_argument("--full-spectrum", action="store_true",
                    help="embed all spectrum coefficients in JSON reports regardless of size")
    pa.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pa.add_argument("--out", metavar="PATH",
                    help="output file (single report) or directory; required for csv")
    pa.add_argument("--workers", type=int, default=0, metavar="N",
                    help="analyze files concurrently (default: min(4, files))")
    pa.set_defaults(func=_cmd_analyze)

    pg = sub.add_parser("generate", help="write a synthetic length-sequence file")
    pg.add_argument("--kind", choices=("geometric", "isometric", "alternating", "mixture"),
                    required=True)
    pg.add_argument("--q", type=float, default=0.75, help="boundary probability (default 0.75)")
    pg.add_argument("--k", type=int, default=10000, help="number of words (default 10000)")
    pg.add_argument("--seed", type=_seed, default=0)
    pg.add_argument("--line-syllables", type=int, default=8, metavar="N",
                    help="syllables per line for isometric/mixture verse (default 8)")
    pg.add_argument("--num-lines", type=int, default=1000, metavar="N",
                    help="lines for the isometric generator (default 1000)")
    pg.add_argument("--long-mean", type=float, default=1.6,
                    help="mean syllables at odd positions for alternating (default 1.6)")
    pg.add_argument("--short-mean", type=float, default=1.2,
                    help="mean syllables at even positions for alternating (default 1.2)")
    pg.add_argument("--verse-q", type=float, default=0.7,
                    help="boundary probability inside mixture verse lines (default 0.7)")
    pg.add_argument("--verse-fraction", type=float, default=0.2,
                    help="word fraction contributed by verse in a mixture (default 0.2)")
    pg.add_argument("--out", metavar="PATH", help="output file (default stdout)")
    pg.set_defaults(func=_cmd_generate)

    pp = sub.add_parser("plot", help="render one series of a JSON report as SVG")
    pp.add_argument("report", metavar="REPORT.json")
    pp.add_argument("--which", choices=sorted(svgplot.SERIES), required=True)
    pp.add_argument("--out", metavar="PATH", help="output SVG file (default stdout)")
    pp.set_defaults(func=_cmd_plot)

    pc = sub.add_parser("calibrate", help="false-positive rate of the detectors on null corpora")
    pc.add_argument("--q", type=float, default=0.77)
    pc.add_argument("--k", type=int, default=100000)
    pc.add_argument("--seeds", type=int, default=100, metavar="N",
                    help="number of seeded corpora (default 100)")
    pc.add_argument("--seed-base", type=_seed, default=0, metavar="S",
                    help="first seed; corpora use S, S+1, ... (default 0)")
    pc.add_argument("--qn-max", type=int, default=200)
    pc.add_argument("--threshold", type=float, default=0.01)
    pc.add_argument("--tail", choices=("one", "two"), default="one")
    pc.add_argument("--sigma", choices=("robust", "conventional", "paper"), default="robust")
    pc.set_defaults(func=_cmd_calibrate)
    return parser


def _load_lexicon(args) -> tuple[dict[str, int], str | None]:
    # always hand analyze_text an explicit dict: {} means the bare heuristic
    merged: dict[str, int] = {}
    names: list[str] = []
    if not args.no_builtin_lexicon:
        merged.update(builtin_lexicon())
        names.append("builtin")
    if args.lexicon:
        merged.update(load_lexicon(args.lexicon))
        names.append(str(args.lexicon))
    return merged, ("+".join(names) or None)


def _report_stem(report) -> str:
    stem = Path(report.source.get("path", "report")).stem or "report"
    if "section" in report.source:
        stem = f"{stem}.{report.source['section']}"
    return stem


def _cmd_analyze(args) -> int:
    if args.format == "csv" and not args.out:
        print("error: --format csv requires --out DIRECTORY", file=sys.stderr)
        return 2
    try:
        lexicon, lexicon_name = _load_lexicon(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    options = AnalysisOptions(
        lexicon=lexicon,
        lexicon_name=lexicon_name,
        input_kind=args.input,
        split=args.split,
        qn_max=args.qn_max,
        window=args.window,
        threshold=args.threshold,
        tail=args.tail,
        sigma=args.sigma,
        circular=args.circular,
        max_lag=args.max_lag,
        seed=args.seed,
        baselines=args.baselines,
        full_spectrum=args.full_spectrum,
    )

    def run(path):
        return analyze_file(path, options)

    workers = args.workers or min(4, len(args.paths))
    failures: list[str] = []
    reports = []
    if workers > 1 and len(args.paths) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda p: _guard(run, p), args.paths))
    else:
        outcomes = [_guard(run, p) for p in args.paths]
    for path, (result, error) in zip(args.paths, outcomes):
        if error is not None:
            failures.append(f"{path}: {error}")
        else:
            reports.extend(result)

    for failure in failures:
        print(f"error: {failure}", file=sys.stderr)

    many = len(reports) > 1
    if args.format == "csv":
        for report in reports:
            write_csv(report, args.out, _report_stem(report))
    elif args.out and (many or Path(args.out).is_dir()):
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        ext = "json" if args.format == "json" else "txt"
        for report in reports:
            rendered = render_json(report) if args.format == "json" else render_text(report)
            (directory / f"{_report_stem(report)}.{ext}").write_text(rendered, encoding="utf-8")
    else:
        chunks = [render_json(r) if args.format == "json" else render_text(r) for r in reports]
        output = "".join(chunks)
        if args.out:
            Path(args.out).write_text(output, encoding="utf-8")
        else:
            sys.stdout.write(output)
    return 1 if failures else 0


def _guard(fn, path):
    try:
        return fn(path), None
    except (OSError, ValueError) as exc:
        return None, str(exc)


def _cmd_generate(args) -> int:
    try:
        if args.kind == "geometric":
            lengths = generators.random_segmented(args.q, args.k, args.seed)
            header = {"kind": "geometric", "q": args.q, "k": args.k, "seed": args.seed}
        elif args.kind == "isometric":
            lengths = generators.isometric_lines(
                args.line_syllables, args.num_lines, args.q, args.seed
            )
            header = {
                "kind": "isometric", "line_syllables": args.line_syllables,
                "num_lines": args.num_lines, "q": args.q, "seed": args.seed,
            }
        elif args.kind == "alternating":
            lengths = generators.alternating(args.k, args.long_mean, args.short_mean, args.seed)
            header = {
                "kind": "alternating", "k": args.k, "long_mean": args.long_mean,
                "short_mean": args.short_mean, "seed": args.seed,
            }
        else:
            prose_seed, verse_seed = (
                int(s) for s in np.random.SeedSequence(args.seed).generate_state(2)
            )
            prose = generators.GeneratorSpec(kind="geometric", q=args.q, k=args.k, seed=prose_seed)
            verse = generators.GeneratorSpec(
                kind="isometric", q=args.verse_q, line_syllables=args.line_syllables,
                seed=verse_seed,
            )
            lengths = generators.mixture(prose, verse, args.verse_fraction, args.seed)
            header = {
                "kind": "mixture", "q": args.q, "k": args.k, "verse_q": args.verse_q,
                "line_syllables": args.line_syllables, "verse_fraction": args.verse_fraction,
                "seed": args.seed,
            }
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    header["generator"] = f"lineometer {__version__}"
    if args.out:
        write_lengths(args.out, lengths, header)
    else:
        for key, value in header.items():
            print(f"# {key}={value}")
        for start in range(0, lengths.size, 20):
            print(" ".join(str(v) for v in lengths[start : start + 20]))
    return 0


def _cmd_plot(args) -> int:
    try:
        with open(args.report, encoding="utf-8") as fh:
            report = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {args.report}: {exc}", file=sys.stderr)
        return 1
    try:
        svg = svgplot.from_report(report, args.which)
    except (KeyError, TypeError):
        print(f"error: {args.report}: not a lineometer analysis report", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_calibrate(args) -> int:
    if args.seeds < 1:
        print("error: --seeds must be >= 1", file=sys.stderr)
        return 2
    flagged = []
    for seed in range(args.seed_base, args.seed_base + args.seeds):
        lengths = generators.random_segmented(args.q, args.k, seed)
        model = fit_segmentation(lengths)
        spectrum = fourier_coefficients(lengths, model)
        peaks = significant_coefficients(spectrum, threshold=args.threshold, tail=args.tail)
        profile = boundary_profile(lengths, n_max=args.qn_max)
        sig = boundary_significance(
            profile, threshold=args.threshold, scale=args.sigma, tail=args.tail
        )
        labels = [f"spectrum m={p.m} ({p.component})" for p in peaks]
        labels += [f"qn n={f.n}" for f in sig.flagged]
        if labels:
            flagged.append((seed, labels))
            print(f"seed {seed}: flagged {', '.join(labels)}")
    rate = len(flagged) / args.seeds
    print(
        f"false positives: {len(flagged)}/{args.seeds} seeds ({100 * rate:.1f}%)"
        f" at threshold {args.threshold} (q={args.q}, k={args.k}, sigma={args.sigma})"
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
