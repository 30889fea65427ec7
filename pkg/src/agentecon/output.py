"""CSV and SVG writers for run reports.

Both writers are byte-deterministic: the same report always produces the
same file contents.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

from matplotlib.ticker import MaxNLocator

from .errors import OutputError
from .scenario import RunReport

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#d62728", "#8c564b", "#17becf")
DASHES = ("", "6,4", "2,3", "8,3,2,3")


def _fmt(value: float) -> str:
    return f"{value:.16e}"


def _write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


# -- CSV -------------------------------------------------------------------


def report_table(report: RunReport) -> tuple[list[str], list[list[str]]]:
    """Header and rows for a report, as written to CSV."""
    if report.allocation is not None:
        header = ["human_share", f"Model 2 (t={report.allocation.t:g})"]
        rows = [[_fmt(x), _fmt(y)] for x, y in report.allocation.profile]
        return header, rows
    columns = list(report.series) + list(report.derived)
    if not columns:
        raise OutputError(f"report {report.spec.name!r} has no series to write")
    years = columns[0].years
    if any(c.years != years for c in columns):
        raise OutputError(f"report {report.spec.name!r} mixes series over different years")
    header = ["year"] + [c.name for c in columns]
    rows = [[str(year)] + [_fmt(c.values[i]) for c in columns] for i, year in enumerate(years)]
    return header, rows


def format_csv(report: RunReport) -> str:
    header, rows = report_table(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def write_csv(report: RunReport, path: str | Path) -> Path:
    return _write_text(path, format_csv(report))


def read_csv(path: str | Path) -> dict[str, list[float]]:
    """Columns of a CSV written by :func:`write_csv`, keyed by header name."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        cols: dict[str, list[float]] = {name: [] for name in header}
        for row in reader:
            for name, cell in zip(header, row):
                cols[name].append(float(cell))
    return cols


# -- SVG -------------------------------------------------------------------


@dataclass(frozen=True)
class ChartSeries:
    name: str
    x: tuple[float, ...]
    y: tuple[float, ...]


@dataclass(frozen=True)
class ChartSpec:
    title: str
    x_label: str
    y_label: str
    series: tuple[ChartSeries, ...]
    # vertical reference lines: (x position, label)
    markers: tuple[tuple[float, str], ...] = ()

    def __post_init__(self) -> None:
        if not self.series:
            raise ValueError("chart needs at least one series")
        domain = self.series[0].x
        for s in self.series:
            if len(s.x) != len(s.y):
                raise ValueError(f"series {s.name!r}: x and y lengths differ")
            if len(s.x) < 2:
                raise ValueError(f"series {s.name!r} has fewer than two points; nothing to draw")
            if s.x != domain:
                raise ValueError(f"series {s.name!r} does not share the chart's x-domain")
            if not all(math.isfinite(v) for v in s.x + s.y):
                raise ValueError(f"series {s.name!r} contains non-finite values")


def _axis(lo: float, hi: float, nbins: int, integer: bool = False) -> tuple[float, float, list[float]]:
    if hi == lo:
        pad = abs(lo) * 0.01 or 1.0
        lo, hi = lo - pad, hi + pad
    ticks = [float(t) for t in MaxNLocator(nbins=nbins, integer=integer).tick_values(lo, hi)]
    lo, hi = min(lo, ticks[0]), max(hi, ticks[-1])
    return lo, hi, [t for t in ticks if lo <= t <= hi]


def _scale_exponent(values: Sequence[float]) -> int:
    peak = max(abs(v) for v in values)
    if peak == 0:
        return 0
    e = int(math.floor(math.log10(peak)))
    return 3 * (e // 3) if abs(e) >= 4 else 0


def _tick_label(v: float) -> str:
    text = f"{v:.6g}"
    return "0" if text in ("-0", "0") else text


def render_svg(chart: ChartSpec, width: int = 760, height: int = 440) -> str:
    left, right, top, bottom = 78, 210, 44, 56
    pw, ph = width - left - right, height - top - bottom

    xs = chart.series[0].x
    all_y = [v for s in chart.series for v in s.y]
    exp = _scale_exponent(all_y)
    factor = 10.0**exp
    x0, x1, xticks = _axis(min(xs), max(xs), 8, integer=all(float(x).is_integer() for x in xs))
    y0, y1, yticks = _axis(min(all_y) / factor, max(all_y) / factor, 6)

    def px(x: float) -> float:
        return left + (x - x0) / (x1 - x0) * pw

    def py(y: float) -> float:
        return top + ph - (y - y0) / (y1 - y0) * ph

    y_label = chart.y_label + (f" (×10^{exp})" if exp else "")
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="Helvetica, Arial, sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{left + pw / 2:.2f}" y="24" text-anchor="middle" font-size="14">{escape(chart.title)}</text>',
        '<g class="grid" stroke="#e0e0e0" stroke-width="1">',
    ]
    for t in yticks:
        out.append(f'<line x1="{left}" y1="{py(t):.2f}" x2="{left + pw}" y2="{py(t):.2f}"/>')
    out.append("</g>")

    out.append('<g class="axes" stroke="black" stroke-width="1">')
    out.append(f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}"/>')
    out.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}"/>')
    for t in xticks:
        out.append(f'<line x1="{px(t):.2f}" y1="{top + ph}" x2="{px(t):.2f}" y2="{top + ph + 5}"/>')
    for t in yticks:
        out.append(f'<line x1="{left - 5}" y1="{py(t):.2f}" x2="{left}" y2="{py(t):.2f}"/>')
    out.append("</g>")

    out.append('<g class="ticks">')
    for t in xticks:
        out.append(f'<text x="{px(t):.2f}" y="{top + ph + 18}" text-anchor="middle">{_tick_label(t)}</text>')
    for t in yticks:
        out.append(f'<text x="{left - 8}" y="{py(t) + 4:.2f}" text-anchor="end">{_tick_label(t)}</text>')
    out.append("</g>")
    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 14}" text-anchor="middle">{escape(chart.x_label)}</text>')
    out.append(
        f'<text x="18" y="{top + ph / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {top + ph / 2:.2f})">{escape(y_label)}</text>'
    )

    for x, label in chart.markers:
        out.append(
            f'<line class="marker" x1="{px(x):.2f}" y1="{top}" x2="{px(x):.2f}" y2="{top + ph}" '
            'stroke="#555555" stroke-dasharray="3,3"/>'
        )
        out.append(f'<text x="{px(x) + 4:.2f}" y="{top + 14}" fill="#555555">{escape(label)}</text>')

    for i, s in enumerate(chart.series):
        color = PALETTE[i % len(PALETTE)]
        dash = DASHES[(i // len(PALETTE)) % len(DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        points = " ".join(f"{px(x):.2f},{py(y / factor):.2f}" for x, y in zip(s.x, s.y))
        out.append(
            f'<polyline class="series" data-name={quoteattr(s.name)} fill="none" stroke="{color}" '
            f'stroke-width="2"{dash_attr} points="{points}"/>'
        )

    out.append('<g class="legend">')
    lx, ly = left + pw + 16, top + 8
    for i, s in enumerate(chart.series):
        color = PALETTE[i % len(PALETTE)]
        y = ly + 20 * i
        out.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 24}" y2="{y}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 30}" y="{y + 4}">{escape(s.name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg_chart(chart: ChartSpec, path: str | Path) -> Path:
    return _write_text(path, render_svg(chart))


def chart_for_report(report: RunReport) -> ChartSpec:
    """Line chart of a report's primary series (comparisons stay in the CSV)."""
    spec = report.spec
    title = spec.title or spec.name
    if report.allocation is not None:
        alloc = report.allocation
        xs = tuple(x for x, _ in alloc.profile)
        ys = tuple(y for _, y in alloc.profile)
        return ChartSpec(
            title,
            "Human resource share R_H / R",
            "Total social output (USD)",
            (ChartSeries(f"Model 2 (t={alloc.t:g})", xs, ys),),
            markers=((alloc.best_share, f"optimum {alloc.best_share:.3f}"),),
        )
    y_label = "Network multiplier" if spec.quantity == "multiplier" else "Total social output (USD)"
    series = tuple(ChartSeries(s.name, tuple(float(y) for y in s.years), s.values) for s in report.series)
    return ChartSpec(title, "Year", y_label, series)
