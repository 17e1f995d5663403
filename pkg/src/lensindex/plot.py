"""Jump tables and SVG step plots for Bott functions on [0, 1/2] turns."""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .index import HALF, BottFunction

Row = tuple[Fraction, Fraction, Fraction, Fraction]


def bott_rows(b: BottFunction, scale: int = 1) -> list[Row]:
    """Rows (angle_turns, value, s_plus, s_minus), all divided by ``scale``.

    The first row is the point 1 on the circle; every further row is a jump
    point, plus a closing row at 1/2 when -1 is not a jump.  ``value`` is the
    value at that point.
    """
    N = Fraction(scale)
    rows: list[Row] = [(Fraction(0), b.value_at_one / N, b.split_at_one / N, b.split_at_one / N)]
    for ang, sp, sm in b.jumps:
        rows.append((ang, b(ang) / N, sp / N, sm / N))
    if not b.jumps or b.jumps[-1][0] != HALF:
        rows.append((HALF, b(HALF) / N, Fraction(0), Fraction(0)))
    return rows


def rows_to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["angle_turns", "value", "s_plus", "s_minus"])
    for r in rows:
        w.writerow([str(x) for x in r])
    return buf.getvalue()


def bott_svg(b: BottFunction, scale: int = 1, title: str = "",
             width: int = 640, height: int = 360) -> str:
    """Step plot of B/scale over [0, pi].

    Filled dots mark the value taken at a jump point, open dots the limits of
    the neighbouring arcs.
    """
    N = Fraction(scale)
    pieces = [(lo, hi, v / N) for lo, hi, v in b.pieces()]
    vals = [float(v) for _, _, v in pieces]
    vmin, vmax = min(vals), max(vals)
    if vmax == vmin:
        vmin, vmax = vmin - 1, vmax + 1
    pad = 48

    def X(t: Fraction) -> float:
        return pad + float(t / HALF) * (width - 2 * pad)

    def Y(v: float | Fraction) -> float:
        return height - pad - (float(v) - vmin) / (vmax - vmin) * (height - 2 * pad)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect width="{width}" height="{height}" fill="white"/>',
           f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
           f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
           f'<text x="{pad}" y="{height - pad / 3:.1f}" font-size="12">0</text>',
           f'<text x="{width - pad}" y="{height - pad / 3:.1f}" font-size="12" '
           f'text-anchor="end">&#960;</text>']
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="{pad / 2:.1f}" font-size="14" '
                   f'text-anchor="middle">{title}</text>')
    for v in sorted(set(v for _, _, v in pieces)):
        out.append(f'<text x="{pad - 6}" y="{Y(v) + 4:.1f}" font-size="11" '
                   f'text-anchor="end">{v}</text>')
    r = 4
    for lo, hi, v in pieces:
        if hi > lo:
            out.append(f'<line x1="{X(lo):.1f}" y1="{Y(v):.1f}" x2="{X(hi):.1f}" y2="{Y(v):.1f}" '
                       f'stroke="steelblue" stroke-width="2"/>')
            for t in (lo, hi):
                out.append(f'<circle cx="{X(t):.1f}" cy="{Y(v):.1f}" r="{r}" fill="white" '
                           f'stroke="steelblue"/>')
    for lo, hi, v in pieces:
        if hi == lo:
            out.append(f'<circle cx="{X(lo):.1f}" cy="{Y(v):.1f}" r="{r}" fill="steelblue"/>')
    for ang, _, _ in b.jumps:
        out.append(f'<line x1="{X(ang):.1f}" y1="{pad}" x2="{X(ang):.1f}" y2="{height - pad}" '
                   f'stroke="gray" stroke-dasharray="3,3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
