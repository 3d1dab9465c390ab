"""Deterministic SVG figures for scenes and construction output.

Rendering is presentation only: parabola arcs are drawn as cubic Bezier
segments (the exact quadratic Bezier of the arc, degree-elevated), points
as labeled dots, lines clipped to the frame, and ideal points as labeled
arrows on the frame edge.  The viewBox is computed from the finite content
with a 10% margin; identical input always yields identical bytes.
"""

from __future__ import annotations

from .parabola import Parabola
from .scene import Drawables

_POINT_STYLE = 'fill="#b2182b"'
_LINE_STYLE = 'stroke="#2166ac" stroke-width="0.7%" fill="none"'
_CURVE_STYLE = 'stroke="#4d9221" stroke-width="0.7%" fill="none"'
_TEXT_STYLE = 'font-family="monospace"'


def _fmt(value: float) -> str:
    return f"{value:.6g}"


class EmptySceneError(ValueError):
    pass


def _bounds(draw: Drawables) -> tuple[float, float, float, float]:
    xs, ys = [], []
    for p in draw.points.values():
        xs.append(float(p.x))
        ys.append(float(p.y))
    for line in draw.lines.values():
        if line.is_singular:
            xs.append(float(line.x0))
    if not xs:
        raise EmptySceneError("nothing drawable in the scene")
    if not ys:
        ys = [0.0]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span_x = max(hi_x - lo_x, 1.0)
    span_y = max(hi_y - lo_y, 1.0)
    margin_x, margin_y = 0.1 * span_x, 0.1 * span_y
    return lo_x - margin_x, hi_x + margin_x, lo_y - margin_y, hi_y + margin_y


def _parabola_path(curve: Parabola, x_lo: float, x_hi: float) -> str:
    """Cubic Bezier for the arc over [x_lo, x_hi].

    The arc of a quadratic over an interval is exactly the quadratic
    Bezier whose control point is the tangent intersection at the interval
    midpoint abscissa; elevating to a cubic keeps renderers happy.
    """
    k, b, g = float(curve.kappa), float(curve.beta), float(curve.gamma)

    def y(x):
        return (k * x + b) * x + g

    p0 = (x_lo, y(x_lo))
    p2 = (x_hi, y(x_hi))
    xm = (x_lo + x_hi) / 2
    ctrl = (xm, y(x_lo) + (2 * k * x_lo + b) * (xm - x_lo))
    c1 = (p0[0] + 2 * (ctrl[0] - p0[0]) / 3, p0[1] + 2 * (ctrl[1] - p0[1]) / 3)
    c2 = (p2[0] + 2 * (ctrl[0] - p2[0]) / 3, p2[1] + 2 * (ctrl[1] - p2[1]) / 3)
    return (f'M {_fmt(p0[0])} {_fmt(p0[1])} '
            f'C {_fmt(c1[0])} {_fmt(c1[1])}, {_fmt(c2[0])} {_fmt(c2[1])}, '
            f'{_fmt(p2[0])} {_fmt(p2[1])}')


def render_svg(draw: Drawables, width: int = 640) -> str:
    """Render drawables into a standalone SVG document string."""
    x_lo, x_hi, y_lo, y_hi = _bounds(draw)

    # Grow the vertical range so parabola arcs stay in frame.
    for curve in draw.parabolas.values():
        for x in (x_lo, x_hi, -float(curve.beta) / (2 * float(curve.kappa))):
            if x_lo <= x <= x_hi:
                yv = (float(curve.kappa) * x + float(curve.beta)) * x \
                    + float(curve.gamma)
                y_lo, y_hi = min(y_lo, yv), max(y_hi, yv)

    span_x, span_y = x_hi - x_lo, y_hi - y_lo
    scale = width / span_x
    height = max(span_y * scale, 64.0)

    def sx(x: float) -> float:
        return (x - x_lo) * scale

    def sy(y: float) -> float:
        return (y_hi - y) * scale  # flip: SVG y grows downward

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{_fmt(height)}" viewBox="0 0 {width} {_fmt(height)}">'
    ]
    parts.append('<rect width="100%" height="100%" fill="white"/>')

    for name in sorted(draw.parabolas):
        curve = draw.parabolas[name]
        raw = _parabola_path(curve, x_lo, x_hi)
        # Re-map the path into pixel coordinates.
        tokens = raw.replace(",", " ").split()
        mapped, i = [], 0
        while i < len(tokens):
            if tokens[i] in ("M", "C"):
                mapped.append(tokens[i])
                i += 1
            else:
                mapped.append(_fmt(sx(float(tokens[i]))))
                mapped.append(_fmt(sy(float(tokens[i + 1]))))
                i += 2
        parts.append(f'<path d="{" ".join(mapped)}" {_CURVE_STYLE}>'
                     f'<title>{name}</title></path>')

    for name in sorted(draw.lines):
        line = draw.lines[name]
        if line.is_singular:
            x = float(line.x0)
            seg = (sx(x), sy(y_lo), sx(x), sy(y_hi))
        else:
            m, k = float(line.m), float(line.k)
            seg = (sx(x_lo), sy(m * x_lo + k), sx(x_hi), sy(m * x_hi + k))
        parts.append(
            f'<line x1="{_fmt(seg[0])}" y1="{_fmt(seg[1])}" '
            f'x2="{_fmt(seg[2])}" y2="{_fmt(seg[3])}" {_LINE_STYLE}>'
            f'<title>{name}</title></line>')

    radius = max(width, height) * 0.006
    for name in sorted(draw.points):
        p = draw.points[name]
        cx, cy = sx(float(p.x)), sy(float(p.y))
        parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                     f'r="{_fmt(radius)}" {_POINT_STYLE}/>')
        parts.append(f'<text x="{_fmt(cx + 2 * radius)}" '
                     f'y="{_fmt(cy - 2 * radius)}" font-size="{_fmt(3 * radius)}" '
                     f'{_TEXT_STYLE}>{name}</text>')

    for label, (anchor, theta) in sorted(draw.angle_labels.items()):
        cx, cy = sx(float(anchor.x)), sy(float(anchor.y))
        parts.append(f'<text x="{_fmt(cx)}" y="{_fmt(cy + 5 * radius)}" '
                     f'font-size="{_fmt(3 * radius)}" {_TEXT_STYLE}>'
                     f'angle({label}) = {theta}</text>')

    # Ideal points: labeled arrows pinned to the top frame edge.
    for idx, label in enumerate(sorted(set(draw.ideal))):
        x = width * (0.15 + 0.2 * idx)
        parts.append(f'<path d="M {_fmt(x)} 24 L {_fmt(x)} 6 '
                     f'M {_fmt(x - 4)} 12 L {_fmt(x)} 6 L {_fmt(x + 4)} 12" '
                     f'stroke="#555555" fill="none" stroke-width="1.5"/>')
        parts.append(f'<text x="{_fmt(x + 6)}" y="18" font-size="12" '
                     f'{_TEXT_STYLE}>{label} (ideal)</text>')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
