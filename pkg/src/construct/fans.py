"""
Quasi-Arc Toolkit - Polygon and Cylinder Shellings
--------------------------------------------------
Polygon: fix a base edge (v_0, v_{m-1}); Block(t) holds the triangulations
whose base triangle has apex v_t, for t = m−2 down to 1. Inside a block the
two sub-polygons [v_0..v_t] and [v_t..v_{m-1}] are shelled recursively (same
rule, their base edges being the new triangle sides) and combined by the
lexicographic product, left part major.

Cylinder: the facets containing the loop P(i,i) are the triangulations of
the polygon obtained by cutting along that loop, with the loop as base edge;
the cylinder order runs through i = 1..n.
"""

import logging
from functools import lru_cache

from ..errors import SurfaceError
from ..shelling.combinators import concat
from ..shelling.order import ShellingOrder
from ..surface.model import QuasiArc, Surface

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def fan_order(m: int) -> tuple[tuple[frozenset, tuple[int, ...]], ...]:
    """Shelling of a polygon with vertices 0..m−1 and base edge (0, m−1).

    Returns (diagonals as index pairs, apex path) per facet.
    """
    if m <= 3:
        return ((frozenset(), (1,) if m == 3 else ()),)
    out = []
    for t in range(m - 2, 0, -1):
        new = set()
        if t > 1:
            new.add((0, t))
        if t < m - 2:
            new.add((t, m - 1))
        for left, left_path in fan_order(t + 1):
            for right, right_path in fan_order(m - t):
                shifted = {(p + t, q + t) for p, q in right}
                path = (t,) + left_path + tuple(a + t for a in right_path)
                out.append((frozenset(new | left | shifted), path))
    return tuple(out)


def polygon_order(vertices, make_arc, label_prefix: str = "", surface: Surface | None = None) -> ShellingOrder:
    """Fan-recursion order on a polygon given by its boundary vertex list.

    The base edge is (vertices[0], vertices[-1]); `make_arc(u, v)` builds the
    arc for the diagonal between vertices[p] and vertices[q], p < q.
    """
    vertices = list(vertices)
    facets = []
    labels = []
    for diagonals, path in fan_order(len(vertices)):
        arcs = sorted(make_arc(vertices[p], vertices[q]) for p, q in diagonals)
        facets.append(tuple(arcs))
        apex = ",".join(str(vertices[a]) for a in path)
        label = f"Apex{{{apex}}}" if apex else ""
        labels.append(f"{label_prefix}/{label}" if label_prefix and label else label_prefix or label)
    return ShellingOrder(tuple(facets), tuple(labels), surface)


def shell_polygon(m: int, base_edge: tuple[int, int] | None = None) -> ShellingOrder:
    """Shelling of the arc complex of the m-gon.

    `base_edge` is a pair of adjacent boundary points (default (m, 1)); the
    first facet is the fan at the endpoint following the base edge clockwise.
    """
    surface = Surface.polygon(m)
    u, v = base_edge or (m, 1)
    if surface.label(v) == surface.label(u + 1):
        start = surface.label(v)
    elif surface.label(u) == surface.label(v + 1):
        start = surface.label(u)
    else:
        raise SurfaceError(f"base edge {base_edge} joins non-adjacent vertices of {surface}")
    vertices = [surface.label(start + s) for s in range(m)]
    order = polygon_order(vertices, lambda a, b: QuasiArc.plain(min(a, b), max(a, b)), surface=surface)
    logger.debug(f"[CONSTRUCT] polygon:{m}: {len(order)} facets")
    return order


def shell_cylinder_loop(n: int, i: int) -> ShellingOrder:
    """Shelling of the facets of cylinder:n containing the loop P(i,i)."""
    surface = Surface.cylinder(n)
    if not 1 <= i <= n:
        raise SurfaceError(f"marked point {i} not on {surface}")
    if n == 1:
        return ShellingOrder(((),), ("Loop{1}",), surface)
    loop = QuasiArc.plain(i, i)
    vertices = [surface.label(i + s) for s in range(n)] + [i]
    order = polygon_order(vertices, QuasiArc.plain, label_prefix=f"Loop{{{i}}}", surface=surface)
    facets = tuple(tuple(sorted(f + (loop,))) for f in order.facets)
    return ShellingOrder(facets, order.provenance, surface)


def shell_cylinder(n: int) -> ShellingOrder:
    surface = Surface.cylinder(n)
    if n == 1:
        return shell_cylinder_loop(1, 1)
    return concat(*(shell_cylinder_loop(n, i) for i in surface.points), surface=surface)
