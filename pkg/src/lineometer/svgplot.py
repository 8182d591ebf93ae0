"""Self-contained SVG renderings of report series.

Renderers take the JSON-ready report dict (what ``analyze --format json``
writes) so plots can be produced later from a stored report.  All float
formatting is fixed-precision, making the output byte-stable for a given
report.
"""

from __future__ import annotations

import math

__all__ = ["from_report", "SERIES", "rank_svg"]

_W, _H = 720, 420
_L, _R, _T, _B = 64, 16, 34, 46


def _f(x: float) -> str:
    return f"{x:.2f}"


class _Frame:
    """Maps data coordinates onto the pixel frame of one panel."""

    def __init__(self, x_lo, x_hi, y_lo, y_hi, top=_T, bottom=_H - _B):
        if x_hi <= x_lo:
            x_hi = x_lo + 1.0
        if y_hi <= y_lo:
            y_hi = y_lo + 1.0
        self.x_lo, self.x_hi, self.y_lo, self.y_hi = x_lo, x_hi, y_lo, y_hi
        self.top, self.bottom = top, bottom

    def x(self, v: float) -> float:
        return _L + (v - self.x_lo) / (self.x_hi - self.x_lo) * (_W - _L - _R)

    def y(self, v: float) -> float:
        return self.bottom - (v - self.y_lo) / (self.y_hi - self.y_lo) * (self.bottom - self.top)

    def axes(self, x_label: str, y_label: str, y_fmt="{:.3g}") -> list[str]:
        parts = [
            f'<rect x="{_L}" y="{self.top}" width="{_W - _L - _R}"'
            f' height="{self.bottom - self.top}" fill="none" stroke="#444"/>'
        ]
        for i in range(5):
            xv = self.x_lo + i * (self.x_hi - self.x_lo) / 4
            yv = self.y_lo + i * (self.y_hi - self.y_lo) / 4
            xp, yp = self.x(xv), self.y(yv)
            parts.append(
                f'<line x1="{_f(xp)}" y1="{self.bottom}" x2="{_f(xp)}" y2="{self.bottom + 4}" stroke="#444"/>'
            )
            parts.append(
                f'<text x="{_f(xp)}" y="{self.bottom + 18}" font-size="11" text-anchor="middle">{xv:.4g}</text>'
            )
            parts.append(
                f'<line x1="{_L - 4}" y1="{_f(yp)}" x2="{_L}" y2="{_f(yp)}" stroke="#444"/>'
            )
            parts.append(
                f'<text x="{_L - 7}" y="{_f(yp + 4)}" font-size="11" text-anchor="end">{y_fmt.format(yv)}</text>'
            )
        parts.append(
            f'<text x="{(_L + _W - _R) / 2:.1f}" y="{_H - 10}" font-size="12" text-anchor="middle">{x_label}</text>'
        )
        parts.append(
            f'<text x="16" y="{(self.top + self.bottom) / 2:.1f}" font-size="12" text-anchor="middle"'
            f' transform="rotate(-90 16 {(self.top + self.bottom) / 2:.1f})">{y_label}</text>'
        )
        return parts

    def polyline(self, xs, ys, color="#1660a8", width=1.2) -> str:
        pts = " ".join(f"{_f(self.x(a))},{_f(self.y(b))}" for a, b in zip(xs, ys))
        return f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{width}"/>'

    def dots(self, xs, ys, r=2.0, color="#1660a8", fill=True) -> list[str]:
        style = f'fill="{color}"' if fill else f'fill="none" stroke="{color}"'
        return [
            f'<circle cx="{_f(self.x(a))}" cy="{_f(self.y(b))}" r="{r}" {style}/>'
            for a, b in zip(xs, ys)
        ]


def _document(title: str, body: list[str]) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}"'
        f' viewBox="0 0 {_W} {_H}" font-family="sans-serif">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.0f}" y="20" font-size="13" text-anchor="middle">{title}</text>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def _thin(values: list, limit: int = 8192) -> tuple[list, int]:
    if len(values) <= limit:
        return values, 1
    stride = -(-len(values) // limit)
    return values[::stride], stride


def _histogram(report: dict) -> str:
    rows = report["histogram"]["excess"]
    if not rows:
        raise ValueError("report does not contain histogram rows")
    xs = [r["s"] for r in rows]
    emp = [r["p_empirical"] for r in rows]
    mod = [r["p_model"] for r in rows]
    frame = _Frame(min(xs) - 0.5, max(xs) + 0.5, 0.0, max(max(emp), max(mod)) * 1.08)
    body = frame.axes("syllables per word", "probability")
    width = (frame.x(1.4) - frame.x(1.0))  # 0.4 data units wide
    for x, p in zip(xs, emp):
        xp = frame.x(x) - width / 2
        body.append(
            f'<rect x="{_f(xp)}" y="{_f(frame.y(p))}" width="{_f(width)}"'
            f' height="{_f(frame.y(0) - frame.y(p))}" fill="#7aa8d4"/>'
        )
    body.append(frame.polyline(xs, mod, color="#b03030"))
    body.extend(frame.dots(xs, mod, color="#b03030"))
    return _document("word-length histogram vs geometric model", body)


def _spectrum(report: dict) -> str:
    spec = report["spectrum"]
    if "coefficients" not in spec:
        raise ValueError(
            "report does not contain spectrum coefficients; rerun analyze with --full-spectrum"
        )
    k = spec["k"]
    re = spec["coefficients"]["re"]
    im = spec["coefficients"]["im"]
    half = k // 2
    ms = list(range(1, half + 1))
    values = [re[m] for m in ms]
    pairs, stride = _thin(list(zip(ms, values)))
    lo = min(values + [im[m] for m in range(1, (k - 1) // 2 + 1)] or [0.0])
    hi = max(values + [im[m] for m in range(1, (k - 1) // 2 + 1)] or [1.0])
    pad = 0.08 * (hi - lo or 1.0)
    frame = _Frame(0, half, lo - pad, hi + pad)
    body = frame.axes("coefficient index m", "component value")
    sd = math.sqrt(report["model"]["delta"] / 2.0) if report["model"]["delta"] > 0 else 0.0
    if sd:
        for level in (4 * sd, -4 * sd):
            yp = _f(frame.y(level))
            body.append(
                f'<line x1="{_L}" y1="{yp}" x2="{_W - _R}" y2="{yp}"'
                f' stroke="#b03030" stroke-dasharray="4,3"/>'
            )
    body.extend(frame.dots([p[0] for p in pairs], [p[1] for p in pairs], r=1.4))
    im_ms = list(range(1, (k - 1) // 2 + 1))
    im_pairs, _ = _thin([(m, im[m]) for m in im_ms])
    body.extend(
        frame.dots([p[0] for p in im_pairs], [p[1] for p in im_pairs], r=1.4, color="#2e8b57", fill=False)
    )
    title = "spectrum: real (filled) and imaginary (open) components"
    if stride > 1:
        title += f" (every {stride}th point)"
    return _document(title, body)


def _correlation(report: dict) -> str:
    corr = report.get("correlation")
    if not corr:
        raise ValueError("report does not contain a correlation profile")
    values = corr["values"]
    lags = list(range(len(values)))
    lo, hi = min(values), max(values)
    pad = 0.08 * (hi - lo or 1.0)
    frame = _Frame(0, max(len(values) - 1, 1), lo - pad, hi + pad)
    body = frame.axes("lag (words)", "correlation")
    k = report["source"]["words"]
    guide = 4.0 / math.sqrt(k)
    for level in (guide, -guide):
        yp = _f(frame.y(level))
        body.append(
            f'<line x1="{_L}" y1="{yp}" x2="{_W - _R}" y2="{yp}"'
            f' stroke="#b03030" stroke-dasharray="4,3"/>'
        )
    body.append(frame.polyline(lags, values))
    return _document("circular length correlation", body)


def _qn(report: dict) -> str:
    qn = report["qn"]
    values = qn["values"]
    if not values:
        raise ValueError("report does not contain a boundary profile")
    ns = list(range(1, len(values) + 1))
    lo, hi = min(values), max(values)
    pad = 0.08 * (hi - lo or 1.0)
    frame = _Frame(0, len(values), lo - pad, hi + pad)
    body = frame.axes("n (syllables)", "boundary probability")
    yp = _f(frame.y(qn["mean"]))
    body.append(
        f'<line x1="{_L}" y1="{yp}" x2="{_W - _R}" y2="{yp}" stroke="#888" stroke-dasharray="6,4"/>'
    )
    body.append(frame.polyline(ns, values))
    flagged = [(f["n"], f["value"]) for f in qn["flags"]]
    body.extend(
        frame.dots([n for n, _ in flagged], [v for _, v in flagged], r=4.0, color="#b03030", fill=False)
    )
    return _document("word-boundary correlation profile", body)


def rank_svg(distribution, variance: float, title: str = "accumulated probability by rank") -> str:
    """Rank plot (log probability vs value) with the Gaussian tail curve.

    ``distribution`` is a ``RankDistribution``; ``variance`` sets the
    analytic curve P{X >= s} for a zero-mean Gaussian.
    """
    pos, neg = distribution.positive, distribution.negative
    if not pos and not neg:
        raise ValueError("rank distribution is empty")
    all_pairs = pos + neg
    x_hi = max(v for v, _ in all_pairs)
    y_lo = math.log10(min(f for _, f in all_pairs)) - 0.3
    frame = _Frame(0.0, x_hi * 1.05, y_lo, 0.0)
    body = frame.axes("|value|", "log10 P(>= value)", y_fmt="{:.1f}")
    if variance > 0:
        xs = [x_hi * i / 160 for i in range(161)]
        curve = []
        for x in xs:
            p = 0.5 * math.erfc(x / math.sqrt(2.0 * variance))
            if p > 10 ** y_lo:
                curve.append((x, math.log10(p)))
        body.append(frame.polyline([c[0] for c in curve], [c[1] for c in curve], color="#b03030"))
    pos_t, _ = _thin(pos)
    neg_t, _ = _thin(neg)
    body.extend(frame.dots([v for v, _ in pos_t], [math.log10(f) for _, f in pos_t], r=2.2))
    body.extend(
        frame.dots(
            [v for v, _ in neg_t], [math.log10(f) for _, f in neg_t], r=2.2, color="#2e8b57", fill=False
        )
    )
    return _document(title, body)


def _rank(report: dict) -> str:
    spec = report["spectrum"]
    if "coefficients" not in spec:
        raise ValueError(
            "report does not contain spectrum coefficients; rerun analyze with --full-spectrum"
        )
    from .spectral import rank_distribution

    k = spec["k"]
    re = spec["coefficients"]["re"]
    values = [re[m] for m in range(1, k // 2 + 1)]
    dist = rank_distribution(values)
    return rank_svg(
        dist,
        report["model"]["delta"] / 2.0,
        title="spectral coefficient ranks: positive (filled) and negative (open)",
    )


SERIES = {
    "histogram": _histogram,
    "spectrum": _spectrum,
    "correlation": _correlation,
    "qn": _qn,
    "rank": _rank,
}


def from_report(report: dict, which: str) -> str:
    """Render one series of a JSON report as an SVG document."""
    try:
        renderer = SERIES[which]
    except KeyError:
        raise ValueError(f"unknown plot kind {which!r}; choose from {sorted(SERIES)}") from None
    return renderer(report)
