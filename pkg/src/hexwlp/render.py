"""Figure output for punctured hexagons and their lozenge tilings.

Pure geometry helpers (triangle and rhombus corner coordinates) live at the
top so tests never need a plotting backend; matplotlib is imported lazily
inside the two render entry points.  SVG output is deterministic: fixed
hash salt, no embedded timestamp.
"""

from __future__ import annotations

from math import sqrt

from .errors import ParameterError
from .tilings import Region, Tiling, down_cell_corners, up_cell_corners, vertex_position

_SQRT3_2 = sqrt(3.0) / 2.0

# One shade per lozenge orientation, light to dark; the puncture stays unfilled.
AXIS_SHADES = {"x": "0.88", "y": "0.62", "z": "0.38"}


def _xy(vertex) -> tuple[float, float]:
    x, units = vertex_position(vertex)
    return (float(x), units * _SQRT3_2)


def triangle_points(cell, up: bool):
    """Corner coordinates of one unit cell, counterclockwise."""
    corners = up_cell_corners(cell) if up else down_cell_corners(cell)
    return tuple(_xy(v) for v in corners)


def lozenge_points(region: Region, down_idx: int, up_idx: int):
    """Corner coordinates of the rhombus covering the two indexed cells."""
    d = set(down_cell_corners(region.down_cells[down_idx]))
    u = set(up_cell_corners(region.up_cells[up_idx]))
    shared = sorted(d & u)
    if len(shared) != 2:
        raise ParameterError(f"cells {down_idx} and {up_idx} are not adjacent")
    (d_only,) = d - u
    (u_only,) = u - d
    return tuple(_xy(v) for v in (d_only, shared[0], u_only, shared[1]))


def puncture_points(region: Region):
    """Corners of the side-M puncture triangle, or None when M = 0."""
    if region.M == 0:
        return None
    al, be, ga = region.puncture_offsets
    m = region.M
    corners = ((al + m, be, ga), (al, be + m, ga), (al, be, ga + m))
    return tuple(_xy(v) for v in corners)


def _bounds(region: Region):
    pts = [_xy(v) for m in region.down_cells for v in down_cell_corners(m)]
    pts += [_xy(v) for n in region.up_cells for v in up_cell_corners(n)]
    punct = puncture_points(region)
    if punct:
        pts += list(punct)
    if not pts:
        pts = [(0.0, 0.0), (1.0, _SQRT3_2)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return min(xs), max(xs), min(ys), max(ys)


def _figure(region: Region):
    from matplotlib.figure import Figure

    x0, x1, y0, y1 = _bounds(region)
    margin = 0.3
    w = max(x1 - x0, 1.0) + 2 * margin
    h = max(y1 - y0, 1.0) + 2 * margin
    scale = 0.55
    fig = Figure(figsize=(max(2.0, scale * w), max(2.0, scale * h)))
    fig.patch.set_visible(False)
    ax = fig.add_axes((0.0, 0.0, 1.0, 1.0))
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_xlim(x0 - margin, x1 + margin)
    ax.set_ylim(y0 - margin, y1 + margin)
    return fig, ax


def _add_polygon(ax, points, face, edge, width):
    from matplotlib.patches import Polygon

    ax.add_patch(
        Polygon(points, closed=True, facecolor=face, edgecolor=edge, linewidth=width)
    )


def _draw_puncture(ax, region: Region):
    punct = puncture_points(region)
    if punct:
        _add_polygon(ax, punct, "none", "black", 1.0)


def _save(fig, path: str) -> None:
    from matplotlib import rc_context

    svg = str(path).lower().endswith(".svg")
    with rc_context({"svg.hashsalt": "hexwlp", "svg.fonttype": "none"}):
        if svg:
            fig.savefig(path, format="svg", metadata={"Date": None})
        else:
            fig.savefig(path)


def render_region(region: Region, path: str) -> None:
    """Write the bare region: every unit cell outlined, puncture unfilled."""
    fig, ax = _figure(region)
    for m in region.down_cells:
        _add_polygon(ax, triangle_points(m, up=False), "none", "0.45", 0.6)
    for n in region.up_cells:
        _add_polygon(ax, triangle_points(n, up=True), "none", "0.45", 0.6)
    _draw_puncture(ax, region)
    _save(fig, path)


def render_tiling(tiling: Tiling, path: str) -> None:
    """Write one tiling: cells shaded by lozenge orientation, rhombi outlined."""
    region = tiling.region
    fig, ax = _figure(region)
    for i, j in tiling.lozenges:
        shade = AXIS_SHADES[tiling.lozenge_axis(i)]
        _add_polygon(ax, triangle_points(region.down_cells[i], up=False), shade, "0.45", 0.3)
        _add_polygon(ax, triangle_points(region.up_cells[j], up=True), shade, "0.45", 0.3)
    for i, j in tiling.lozenges:
        _add_polygon(ax, lozenge_points(region, i, j), "none", "black", 0.8)
    _draw_puncture(ax, region)
    _save(fig, path)
