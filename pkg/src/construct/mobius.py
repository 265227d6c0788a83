"""
Quasi-Arc Toolkit - Möbius Strip Shellings
------------------------------------------
Facets of the quasi-arc complex of M_n fall into two families:

  without μ   the c-arcs of the facet form a c-triangulation of M_r on a
              set I of r marked points; between consecutive points of I the
              facet holds a plain gap arc and a triangulation of the polygon
              it cuts off
  with μ      cutting along μ leaves a cylinder with n marked points on
              each boundary; the facet is μ plus a cylinder triangulation

shell_mobius runs through the first family by |I| descending (I
lexicographic), each block the product of the c-triangulation order and the
gap polygon orders, then cones μ over the cylinder order.
"""

import logging
from itertools import combinations

from ..complex.core import build_complex
from ..errors import SurfaceError
from ..shelling.combinators import concat, cone, product_all, relabel
from ..shelling.order import ShellingOrder
from ..surface.model import MU, QuasiArc, Surface
from .even import shell_ctri_even
from .fans import polygon_order, shell_cylinder
from .odd import shell_ctri_odd

logger = logging.getLogger(__name__)


def _require_n(n: int) -> Surface:
    if n < 1:
        raise SurfaceError(f"mobius:{n} needs at least one marked point")
    return Surface.mobius(n)


def shell_ctri(n: int) -> ShellingOrder:
    """Shelling of the c-triangulations of M_n."""
    _require_n(n)
    return shell_ctri_even(n) if n % 2 == 0 else shell_ctri_odd(n)


def c_triangulations(n: int) -> tuple[tuple[QuasiArc, ...], ...]:
    """Facets of the full complex made only of c-arcs."""
    cx = build_complex(_require_n(n))
    return tuple(f for f in cx.facets if all(a.is_cross for a in f))


def _gap_order(surface: Surface, start: int, gap: int) -> ShellingOrder:
    """Gap arc P(start, start+gap) and the triangulations of the polygon under it."""
    vertices = [surface.label(start + s) for s in range(gap + 1)]
    inner = polygon_order(vertices, QuasiArc.plain, surface=surface)
    arc = QuasiArc.plain(vertices[0], vertices[-1])
    facets = tuple(tuple(sorted(f + (arc,))) for f in inner.facets)
    return ShellingOrder(facets, inner.provenance, surface)


def _gap_key(surface: Surface, start: int, gap: int) -> int:
    return min(surface.label(start + s) for s in range(gap + 1))


def point_block(n: int, points: tuple[int, ...]) -> ShellingOrder:
    """Facets without μ whose c-arcs sit on exactly the marked points `points`."""
    surface = _require_n(n)
    r = len(points)
    core = relabel(shell_ctri(r), lambda a: QuasiArc.cross(points[a.i - 1], points[a.j - 1]), surface)
    gaps = []
    for t, start in enumerate(points):
        gap = (points[(t + 1) % r] - start) % n if r > 1 else n
        if gap >= 2:
            gaps.append((start, gap))
    gaps.sort(key=lambda g: _gap_key(surface, *g))
    order = product_all([core] + [_gap_order(surface, s, g) for s, g in gaps], surface)
    return order.prefixed("Gamma{" + ",".join(map(str, points)) + "}")


def shell_mobius_triangulations(n: int) -> ShellingOrder:
    """Shelling of the facets of M_n without μ."""
    surface = _require_n(n)
    blocks = [point_block(n, points)
              for size in range(n, 0, -1)
              for points in combinations(range(1, n + 1), size)]
    return concat(*blocks, surface=surface)


def shell_mobius(n: int) -> ShellingOrder:
    surface = _require_n(n)
    order = concat(shell_mobius_triangulations(n),
                   cone(shell_cylinder(n).with_surface(surface), MU, surface),
                   surface=surface)
    logger.info(f"[CONSTRUCT] {surface}: {len(order)} facets in shelling order")
    return order
