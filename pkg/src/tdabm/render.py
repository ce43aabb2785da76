"""Static SVG pictures of a laid-out, sized, colored ball graph.

SVG keeps the output textual and diffable: identical inputs produce
identical bytes, so golden-file tests are possible. One circle per
vertex, one line per edge, optional id labels, and a vertical color bar
annotated with the color range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import MapperGraph
from .layout import LayoutResult, SizeScale, size_scale

PALETTES: dict[str, tuple[str, ...]] = {
    # perceptually ordered multi-hue ramp, dark violet to yellow
    "viridis": ("#440154", "#472d7b", "#3b528b", "#2c728e", "#21918c",
                "#28ae80", "#5ec962", "#addc30", "#fde725"),
    "greys": ("#111111", "#f7f7f7"),
    "blue-red": ("#3b4cc0", "#dddddd", "#b40426"),
}

DEFAULT_PALETTE = "viridis"


@dataclass(frozen=True)
class RenderSpec:
    show_labels: bool = True
    show_legend: bool = False
    n_colors: int = 100
    width_px: int = 512
    height_px: int = 512
    palette: str = DEFAULT_PALETTE
    size: SizeScale = SizeScale()

    def __post_init__(self):
        if self.n_colors < 2:
            raise ValueError("n_colors must be at least 2")
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError("image dimensions must be at least 64 px")
        if self.palette not in PALETTES:
            raise ValueError(f"unknown palette {self.palette!r}; have {sorted(PALETTES)}")


def _hex_to_rgb(code: str) -> tuple[int, int, int]:
    return int(code[1:3], 16), int(code[3:5], 16), int(code[5:7], 16)


def palette_color(name: str, t: float) -> str:
    """Linear interpolation through the palette anchors at t in [0,1]."""
    anchors = [_hex_to_rgb(c) for c in PALETTES[name]]
    t = min(max(t, 0.0), 1.0)
    pos = t * (len(anchors) - 1)
    i = min(int(math.floor(pos)), len(anchors) - 2)
    frac = pos - i
    rgb = tuple(
        int(round(a + (b - a) * frac)) for a, b in zip(anchors[i], anchors[i + 1])
    )
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def color_bin(value: float, lo: float, hi: float, n_colors: int) -> int:
    """1-based equal-width bin of a clamped value; lo -> 1, hi -> n_colors.

    A degenerate range (lo == hi) sends everything to the middle bin.
    """
    if not lo <= hi:
        raise ValueError("need lo <= hi")
    if lo == hi:
        return (n_colors + 1) // 2
    v = min(max(value, lo), hi)
    b = 1 + int(math.floor((v - lo) / (hi - lo) * n_colors))
    return min(max(b, 1), n_colors)


def color_of(value: float, color_range: tuple[float, float], spec: RenderSpec) -> str:
    """Hex color for a value: clamp, bin into ``spec.n_colors``, look up."""
    lo, hi = color_range
    b = color_bin(value, lo, hi, spec.n_colors)
    return palette_color(spec.palette, (b - 1) / (spec.n_colors - 1))


def _colorbar(color_range: tuple[float, float], spec: RenderSpec, width: int,
              height: int) -> list[str]:
    lo, hi = color_range
    bx = width - 44
    bw = 16
    top, bottom = 24.0, height - 24.0
    step = (bottom - top) / spec.n_colors
    cell = step + 0.5  # slight overlap hides hairline gaps between cells
    parts = []
    for b in range(1, spec.n_colors + 1):  # bin 1 (lo) sits at the bottom
        t = (b - 1) / (spec.n_colors - 1)
        parts.append(
            f'<rect x="{bx}" y="{bottom - b * step:.2f}" width="{bw}" '
            f'height="{cell:.2f}" fill="{palette_color(spec.palette, t)}"/>'
        )
    parts.append(
        f'<rect x="{bx}" y="{top:.2f}" width="{bw}" height="{bottom - top:.2f}" '
        f'fill="none" stroke="#2b2b2b" stroke-width="0.5"/>'
    )
    parts.append(
        f'<text x="{bx + bw / 2:.2f}" y="{top - 8:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="9" fill="#000000">{hi:.4g}</text>'
    )
    parts.append(
        f'<text x="{bx + bw / 2:.2f}" y="{bottom + 14:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="9" fill="#000000">{lo:.4g}</text>'
    )
    return parts


def _legend(g: MapperGraph, fills: list[str]) -> list[str]:
    parts = []
    for i, (v, fill) in enumerate(zip(g.vertices, fills)):
        y = 24 + i * 16
        parts.append(
            f'<rect x="10" y="{y - 5}" width="10" height="10" fill="{fill}" '
            f'stroke="#2b2b2b" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="26" y="{y + 3}" font-family="sans-serif" font-size="9" '
            f'fill="#000000">ball {v.id}</text>'
        )
    return parts


def render_svg(g: MapperGraph, layout: LayoutResult, spec: RenderSpec = RenderSpec()) -> bytes:
    """Render the graph as SVG bytes; identical inputs give identical bytes.

    Vertices become circles (radius from the size scale, fill from the
    color binning), edges become lines, and ids become centered labels when
    ``spec.show_labels``. Uncolored graphs render grey without a color bar.
    """
    missing = [v.id for v in g.vertices if v.id not in layout.positions]
    if missing:
        raise ValueError(f"layout has no position for vertices {missing}")
    width, height = spec.width_px, spec.height_px
    coloring = g.coloring
    bar_reserve = 64 if coloring is not None else 0
    legend_reserve = 84 if spec.show_legend else 0
    pad = spec.size.max_size + 14.0
    x0, x1 = legend_reserve + pad, width - bar_reserve - pad
    y0, y1 = pad, height - pad
    if x1 <= x0 or y1 <= y0:
        raise ValueError("image too small for the configured ball sizes")

    def place(p: tuple[float, float]) -> tuple[float, float]:
        # layout y grows upward; SVG y grows downward
        return x0 + p[0] * (x1 - x0), y1 - p[1] * (y1 - y0)

    radii = size_scale([v.size for v in g.vertices], spec.size)
    if coloring is not None:
        color_range = (min(coloring), max(coloring))
        fills = [color_of(v.color, color_range, spec) for v in g.vertices]
    else:
        fills = ["#9e9e9e"] * len(g.vertices)
    xy = {v.id: place(layout.positions[v.id]) for v in g.vertices}

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for e in g.edges:
        (ax, ay), (bx, by) = xy[e.source], xy[e.target]
        parts.append(
            f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
            f'stroke="#6a6a6a" stroke-width="1.5"/>'
        )
    for v, r, fill in zip(g.vertices, radii, fills):
        cx, cy = xy[v.id]
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r:.2f}" fill="{fill}" '
            f'stroke="#2b2b2b" stroke-width="1"/>'
        )
    if spec.show_labels:
        for v in g.vertices:
            cx, cy = xy[v.id]
            parts.append(
                f'<text x="{cx:.2f}" y="{cy:.2f}" dy="0.35em" text-anchor="middle" '
                f'font-family="sans-serif" font-size="10" fill="#000000">{v.id}</text>'
            )
    if coloring is not None:
        parts.extend(_colorbar(color_range, spec, width, height))
    if spec.show_legend:
        parts.extend(_legend(g, fills))
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
