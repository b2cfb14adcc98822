"""ASCII and SVG drawings of a bar code with its stars.

Both use the same geometry: one cell per column, one line per rank with
the minimal variable on top, a bar covering its cells except the last two
character slots, which hold the star (if any) and a gap.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .barcode import BarCode

__all__ = ["ascii_diagram", "svg_diagram", "SVG_COLUMN_WIDTH", "SVG_ROW_HEIGHT"]

BAR = "─"

# SVG geometry, in user units
SVG_COLUMN_WIDTH = 80
SVG_ROW_HEIGHT = 24
SVG_MARGIN = 12
SVG_LABEL_WIDTH = 36
SVG_STAR_GAP = 14


def ascii_diagram(B: BarCode, labels=None) -> str:
    model = B.diagram(labels)
    names = [row["variable"] for row in model["rows"]]
    pad = max(len(s) for s in names) + 1
    cell = max(3, max(len(s) for s in model["columns"]) + 2)
    lines = [" " * pad + "".join(s.ljust(cell) for s in model["columns"]).rstrip()]
    for row in model["rows"]:
        chars = [" "] * (cell * B.m)
        for bar in row["bars"]:
            lo, hi = bar["start"] * cell, bar["end"] * cell
            chars[lo : hi - 2] = BAR * (hi - 2 - lo)
            if bar["starred"]:
                chars[hi - 2] = "*"
        lines.append(row["variable"].ljust(pad) + "".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def svg_diagram(B: BarCode, labels=None) -> str:
    model = B.diagram(labels)
    width = SVG_MARGIN * 2 + SVG_LABEL_WIDTH + SVG_COLUMN_WIDTH * B.m
    height = SVG_MARGIN * 2 + SVG_ROW_HEIGHT * (B.n + 1)
    x0 = SVG_MARGIN + SVG_LABEL_WIDTH
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">'
    ]
    y = SVG_MARGIN + SVG_ROW_HEIGHT // 2
    for c, label in enumerate(model["columns"]):
        out.append(f'<text x="{x0 + c * SVG_COLUMN_WIDTH}" y="{y}">{escape(label)}</text>')
    for r, row in enumerate(model["rows"], 1):
        y = SVG_MARGIN + SVG_ROW_HEIGHT * r + SVG_ROW_HEIGHT // 2
        out.append(f'<text x="{SVG_MARGIN}" y="{y + 4}">{escape(row["variable"])}</text>')
        for bar in row["bars"]:
            xa = x0 + bar["start"] * SVG_COLUMN_WIDTH
            xb = x0 + bar["end"] * SVG_COLUMN_WIDTH - SVG_STAR_GAP - 6
            out.append(
                f'<line x1="{xa}" y1="{y}" x2="{xb}" y2="{y}" stroke="black" stroke-width="2"/>'
            )
            if bar["starred"]:
                out.append(f'<text x="{xb + 4}" y="{y + 4}">*</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
