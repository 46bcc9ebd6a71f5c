"""Deterministic SVG scatter of texts in the invariant plane.

I runs along the horizontal axis, alpha along the vertical.  Marker shape
is keyed by language and fill color by genre; optional reference lines
mark a language's mean I (vertical) and a genre's mean alpha
(horizontal).  The output carries no timestamps or generated ids, so
identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from wordlength.corpus import TextResult, group_means
from wordlength.errors import DomainError, EmptyResultsError, UnknownGroupError

_SHAPES = ("circle", "square", "diamond", "triangle-up", "triangle-down", "hexagon")
_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")
_MARKER_R = 5.0


@dataclass(frozen=True)
class PlotConfig:
    """What to draw: results, optional reference groups, axes, geometry."""

    results: list[TextResult]
    ref_language: str | None = None
    ref_genre: str | None = None
    i_range: tuple[float, float] = (0.0, 1.0)
    alpha_range: tuple[float, float] = (0.0, 1.0)
    width: int = 800
    height: int = 600
    margin: int = 60
    output_path: Path | None = None

    def __post_init__(self):
        if not self.i_range[0] < self.i_range[1]:
            raise DomainError(f"I axis range must increase, got {self.i_range}")
        if not self.alpha_range[0] < self.alpha_range[1]:
            raise DomainError(
                f"alpha axis range must increase, got {self.alpha_range}")


def _marker_svg(shape: str, x: float, y: float, r: float, fill: str,
                stroke: str, attrs: str) -> str:
    if shape == "circle":
        return (f'<circle class="marker" {attrs} cx="{x:.2f}" cy="{y:.2f}" '
                f'r="{r:.2f}" fill="{fill}" stroke="{stroke}"/>')
    if shape == "square":
        return (f'<rect class="marker" {attrs} x="{x - r:.2f}" y="{y - r:.2f}" '
                f'width="{2 * r:.2f}" height="{2 * r:.2f}" fill="{fill}" '
                f'stroke="{stroke}"/>')
    if shape == "diamond":
        points = f"{x:.2f},{y - r:.2f} {x + r:.2f},{y:.2f} {x:.2f},{y + r:.2f} {x - r:.2f},{y:.2f}"
    elif shape == "triangle-up":
        points = f"{x:.2f},{y - r:.2f} {x + r:.2f},{y + r:.2f} {x - r:.2f},{y + r:.2f}"
    elif shape == "triangle-down":
        points = f"{x:.2f},{y + r:.2f} {x + r:.2f},{y - r:.2f} {x - r:.2f},{y - r:.2f}"
    else:  # hexagon
        h = 0.5 * r
        points = (f"{x - h:.2f},{y - r:.2f} {x + h:.2f},{y - r:.2f} "
                  f"{x + r:.2f},{y:.2f} {x + h:.2f},{y + r:.2f} "
                  f"{x - h:.2f},{y + r:.2f} {x - r:.2f},{y:.2f}")
    return (f'<polygon class="marker" {attrs} points="{points}" fill="{fill}" '
            f'stroke="{stroke}"/>')


def plot_plane(cfg: PlotConfig) -> str:
    """Render the scatter as an SVG 1.1 document (returned as text)."""
    plotted = [r for r in cfg.results if r.error is None]
    if not plotted:
        raise EmptyResultsError("no fitted results to plot")

    means = group_means(plotted)
    if cfg.ref_language is not None and cfg.ref_language not in means.language_i:
        raise UnknownGroupError(
            f"no usable results for reference language {cfg.ref_language!r}")
    if cfg.ref_genre is not None and cfg.ref_genre not in means.genre_alpha:
        raise UnknownGroupError(
            f"no usable results for reference genre {cfg.ref_genre!r}")

    languages = sorted({r.language for r in plotted})
    genres = sorted({r.genre for r in plotted})
    shape_of = {lang: _SHAPES[i % len(_SHAPES)] for i, lang in enumerate(languages)}
    color_of = {g: _COLORS[i % len(_COLORS)] for i, g in enumerate(genres)}

    x0, x1 = float(cfg.margin), float(cfg.width - cfg.margin)
    y0, y1 = float(cfg.height - cfg.margin), float(cfg.margin)
    i_lo, i_hi = cfg.i_range
    a_lo, a_hi = cfg.alpha_range

    def x_of(i_val: float) -> float:
        return x0 + (i_val - i_lo) / (i_hi - i_lo) * (x1 - x0)

    def y_of(a_val: float) -> float:
        return y0 + (a_val - a_lo) / (a_hi - a_lo) * (y1 - y0)

    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{cfg.width}" height="{cfg.height}" '
        f'viewBox="0 0 {cfg.width} {cfg.height}">')
    out.append(f'<rect x="0" y="0" width="{cfg.width}" height="{cfg.height}" '
               f'fill="white"/>')
    out.append(f'<rect x="{x0:.2f}" y="{y1:.2f}" width="{x1 - x0:.2f}" '
               f'height="{y0 - y1:.2f}" fill="none" stroke="black"/>')

    # ticks: 6 per axis, 3-decimal labels
    for i in range(6):
        frac = i / 5
        iv = i_lo + frac * (i_hi - i_lo)
        av = a_lo + frac * (a_hi - a_lo)
        xt, yt = x_of(iv), y_of(av)
        out.append(f'<line x1="{xt:.2f}" y1="{y0:.2f}" x2="{xt:.2f}" '
                   f'y2="{y0 + 5:.2f}" stroke="black"/>')
        out.append(f'<text x="{xt:.2f}" y="{y0 + 20:.2f}" font-size="11" '
                   f'text-anchor="middle">{iv:.3f}</text>')
        out.append(f'<line x1="{x0 - 5:.2f}" y1="{yt:.2f}" x2="{x0:.2f}" '
                   f'y2="{yt:.2f}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8:.2f}" y="{yt + 4:.2f}" font-size="11" '
                   f'text-anchor="end">{av:.3f}</text>')
    out.append(f'<text x="{(x0 + x1) / 2:.2f}" y="{y0 + 40:.2f}" font-size="14" '
               f'text-anchor="middle">language invariant I</text>')
    out.append(f'<text x="18" y="{(y0 + y1) / 2:.2f}" font-size="14" '
               f'text-anchor="middle" transform="rotate(-90 18 '
               f'{(y0 + y1) / 2:.2f})">genre invariant alpha</text>')

    if cfg.ref_language is not None:
        xr = x_of(means.language_i[cfg.ref_language])
        out.append(f'<line class="ref-line" data-group="{cfg.ref_language}" '
                   f'x1="{xr:.2f}" y1="{y1:.2f}" x2="{xr:.2f}" y2="{y0:.2f}" '
                   f'stroke="#555555" stroke-dasharray="4 3"/>')
    if cfg.ref_genre is not None:
        yr = y_of(means.genre_alpha[cfg.ref_genre])
        out.append(f'<line class="ref-line" data-group="{cfg.ref_genre}" '
                   f'x1="{x0:.2f}" y1="{yr:.2f}" x2="{x1:.2f}" y2="{yr:.2f}" '
                   f'stroke="#555555" stroke-dasharray="4 3"/>')

    for r in plotted:
        in_range = (i_lo <= r.i_lang <= i_hi) and (a_lo <= r.alpha <= a_hi)
        xi = min(max(r.i_lang, i_lo), i_hi)
        ya = min(max(r.alpha, a_lo), a_hi)
        if not in_range:
            print(f"warning: {r.text_id}: point (I={r.i_lang:.6f}, "
                  f"alpha={r.alpha:.6f}) outside axes; clamped to border",
                  file=sys.stderr)
        color = color_of[r.genre]
        fill = color if in_range else "none"
        attrs = (f'data-text-id="{r.text_id}" data-language="{r.language}" '
                 f'data-genre="{r.genre}" data-i="{r.i_lang:.6f}" '
                 f'data-alpha="{r.alpha:.6f}"')
        out.append(_marker_svg(shape_of[r.language], x_of(xi), y_of(ya),
                               _MARKER_R, fill, color, attrs))

    # legend: languages (shapes) then genres (colors)
    ly = y1 + 10.0
    lx = x1 - 150.0
    for lang in languages:
        out.append(_marker_svg(shape_of[lang], lx, ly, 4.0, "#333333",
                               "#333333", f'data-legend-language="{lang}"'))
        out.append(f'<text x="{lx + 10:.2f}" y="{ly + 4:.2f}" '
                   f'font-size="11">{lang}</text>')
        ly += 16.0
    ly += 6.0
    for g in genres:
        out.append(f'<rect data-legend-genre="{g}" x="{lx - 4:.2f}" '
                   f'y="{ly - 4:.2f}" width="8" height="8" '
                   f'fill="{color_of[g]}"/>')
        out.append(f'<text x="{lx + 10:.2f}" y="{ly + 4:.2f}" '
                   f'font-size="11">{g}</text>')
        ly += 16.0

    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_plot(cfg: PlotConfig) -> None:
    """Render and write the SVG to cfg.output_path."""
    if cfg.output_path is None:
        raise DomainError("PlotConfig.output_path is not set")
    Path(cfg.output_path).write_text(plot_plane(cfg), encoding="utf-8")
