"""SVG rendering of a tiling (coordinates evaluated in double precision)."""

from __future__ import annotations

import math
from xml.sax.saxutils import quoteattr

from .tiling import Tiling


class IoError(OSError):
    pass


def cartesian(t: Tiling) -> list[tuple[float, float]]:
    """Float Cartesian coordinates: e1 along the x axis, e2 in the upper half plane."""
    g11, g12, g22 = (float(g) for g in t.gram)
    n1 = math.sqrt(g11)
    e1 = (n1, 0.0)
    e2 = (g12 / n1, math.sqrt(max(g22 - g12 * g12 / g11, 0.0)))
    return [(float(x) * e1[0] + float(y) * e2[0], float(x) * e1[1] + float(y) * e2[1])
            for x, y in t.points]


def render_svg(t: Tiling, colors: list[int] | None = None, width: float = 600.0) -> str:
    pts = cartesian(t)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = width / span
    pad = 0.02 * width
    w, h = (x1 - x0) * scale + 2 * pad, (y1 - y0) * scale + 2 * pad

    def xy(i):
        x, y = pts[i]
        return f"{(x - x0) * scale + pad:.3f},{(y1 - y) * scale + pad:.3f}"  # SVG y points down

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.3f} {h:.3f}" '
        f'width="{w:.0f}" height="{h:.0f}">'
    ]
    for ti, tile in enumerate(t.tiles):
        fill = "none"
        if colors is not None:
            fill = "#222222" if colors[ti] > 0 else "#ffffff"
        lines.append(f'  <polygon points={quoteattr(" ".join(xy(i) for i in tile))} '
                     f'fill="{fill}" stroke="#000000" stroke-width="1"/>')
    lines.append(f'  <polygon points={quoteattr(" ".join(xy(i) for i in t.outer))} '
                 'fill="none" stroke="#c00000" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_svg(t: Tiling, path, colors: list[int] | None = None) -> None:
    if not path:
        raise IoError("empty output path")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_svg(t, colors))
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
