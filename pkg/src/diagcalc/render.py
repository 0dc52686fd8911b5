"""Deterministic SVG pictures of partition diagrams.

Upper point ``k`` sits at ``(x(k), TOP)`` and lower point ``k'`` directly
beneath it at ``(x(k), BOTTOM)``, with unit horizontal spacing.  Each block
contributes arcs between its consecutive upper points (bowing down into the
strip) and between its consecutive lower points (bowing up), with the bow
depth growing with the horizontal span so nested blocks draw as visually
nested arcs; each transversal additionally contributes one straight edge
from its least upper point to its least lower point.

Every coordinate is formatted with one decimal place and elements are
emitted in canonical block order, so the output bytes depend only on the
input diagram and ``LAYOUT_VERSION``.  Bump the version whenever any layout
constant changes.
"""

from __future__ import annotations

from .partitions import Diagram

LAYOUT_VERSION = 1

UNIT = 40.0  # horizontal distance between adjacent points
MARGIN = 30.0  # padding on every side of the point grid
STRIP = 100.0  # vertical distance between the rows
RADIUS = 3.5  # vertex dot radius
BOW = 0.42  # fraction of the strip a full-width arc dips into

STROKE = "#1a1a1a"
WIDTH = "1.5"


def _fmt(value: float) -> str:
    return f"{value:.1f}"


def render_svg(d: Diagram) -> str:
    """An SVG document for ``d``, byte-stable per input and layout version.

    >>> print(render_svg(Diagram.from_text("[[1,-1]]")))  # doctest: +ELLIPSIS
    <svg xmlns="http://www.w3.org/2000/svg" ...
    """
    n = d.n
    top = MARGIN
    bottom = MARGIN + STRIP
    width = 2 * MARGIN + UNIT * max(n - 1, 0)
    height = 2 * MARGIN + STRIP

    def x(point: int) -> float:
        return MARGIN + UNIT * (point - 1)

    def arc(a: int, b: int, y: float, downward: bool) -> str:
        depth = STRIP * BOW * (b - a) / max(n - 1, 1)
        control = y + depth if downward else y - depth
        return (
            f'<path d="M {_fmt(x(a))} {_fmt(y)} '
            f'Q {_fmt((x(a) + x(b)) / 2)} {_fmt(control)} '
            f'{_fmt(x(b))} {_fmt(y)}"/>'
        )

    edges: list[str] = []
    for block in d.blocks():
        uppers = [v for v in block if v > 0]
        lowers = [-v for v in block if v < 0]
        for a, b in zip(uppers, uppers[1:]):
            edges.append(arc(a, b, top, downward=True))
        for a, b in zip(lowers, lowers[1:]):
            edges.append(arc(a, b, bottom, downward=False))
        if uppers and lowers:
            edges.append(
                f'<line x1="{_fmt(x(uppers[0]))}" y1="{_fmt(top)}" '
                f'x2="{_fmt(x(lowers[0]))}" y2="{_fmt(bottom)}"/>'
            )

    dots = [
        f'<circle cx="{_fmt(x(k))}" cy="{_fmt(y)}" r="{_fmt(RADIUS)}"/>'
        for y in (top, bottom)
        for k in range(1, n + 1)
    ]

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<!-- layout v{LAYOUT_VERSION}: {d.text()} -->",
        f'<g fill="none" stroke="{STROKE}" stroke-width="{WIDTH}" stroke-linecap="round">',
        *edges,
        "</g>",
        f'<g fill="{STROKE}" stroke="none">',
        *dots,
        "</g>",
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
