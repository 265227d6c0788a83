"""
Quasi-Arc Toolkit - c-Triangulations, n odd
-------------------------------------------
n = 2k+1. A d-triangle with special vertex s is the pair a_s = C(s, s+k),
b_s = C(s, s+k+1). Every c-triangulation holds an odd set I of them.

Y-block: c-triangulations whose only d-triangle has special vertex k+1.
Splitting that vertex in two turns it into the X1 half of the D-block of
M_{n+1}; shell_Y pulls the X1 upper shelling back along this split.

For a set I the staircase runs from b_s to a_{s'}, s' the successor of s
(first element of I at or after s+k+1, cyclically), through a Y-block of
M_{2g+1}, g the offset of s' from s+k+1. I is admissible when the successor
map is one cycle through I and the offsets sum to (n − |I|)/2. D_I is the
product of the region orders, smallest boundary label first; blocks run
over |I| descending, I lexicographic within a size.
"""

import logging
from functools import partial
from itertools import combinations

from ..errors import BlockError, ParityError
from ..shelling.combinators import concat, product_all
from ..shelling.order import ShellingOrder
from ..surface.classify import d_triangles
from ..surface.model import QuasiArc, Surface
from .dblock import cross_mod, upper_shell_X1

logger = logging.getLogger(__name__)


def _require_odd(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ParityError(f"odd construction needs an odd n ≥ 1, got {n}")
    return n // 2


def odd_length(n: int, arc: QuasiArc) -> int:
    """j − i + 1 for a Y-block arc C(i, j), i ≤ k+1 ≤ j."""
    k = _require_odd(n)
    if not arc.is_cross or not arc.i <= k + 1 <= arc.j:
        raise BlockError(f"{arc} is not an arc of the Y-block of mobius:{n}")
    return arc.j - arc.i + 1


def odd_length_fn(n: int):
    return partial(odd_length, n)


def in_y_block(n: int, facet) -> bool:
    k = _require_odd(n)
    facet = tuple(facet)
    return (len(facet) == n and all(a.is_cross for a in facet)
            and d_triangles(Surface.mobius(n), facet) == (k + 1,))


def shell_Y(n: int) -> ShellingOrder:
    """Y-block order: the X1 order of M_{n+1} with the split vertex merged."""
    k = _require_odd(n)
    upper = upper_shell_X1(n + 1)
    split_diag = QuasiArc.cross(1, k + 2)
    facets = tuple(tuple(sorted(QuasiArc.cross(a.i - 1, a.j - 1) for a in f if a != split_diag))
                   for f in upper.facets)
    labels = tuple("Y" + p[2:] for p in upper.provenance)
    return ShellingOrder(facets, labels, Surface.mobius(n))


def successor(n: int, triangles: tuple[int, ...], s: int) -> tuple[int, int]:
    """(s', g): next special vertex after s and its offset from s+k+1."""
    k = n // 2
    return min(((t - (s + k + 1)) % n, t) for t in triangles)[::-1]


def is_admissible(n: int, triangles: tuple[int, ...]) -> bool:
    if not triangles or len(triangles) % 2 == 0:
        return False
    visited = []
    s = triangles[0]
    total = 0
    for _ in triangles:
        s, g = successor(n, triangles, s)
        visited.append(s)
        total += g
    return sorted(visited) == sorted(triangles) and 2 * total == n - len(triangles)


def region_order(n: int, s: int, g: int) -> ShellingOrder:
    """Y-block order of M_{2g+1} placed between b_s and a_{s'}."""
    k = n // 2
    local = shell_Y(2 * g + 1)
    dx, dy = s - k - 1, s - g - 1
    facets = tuple(tuple(sorted(cross_mod(n, a.i + dx, a.j + dy) for a in f)) for f in local.facets)
    return ShellingOrder(facets, local.provenance, Surface.mobius(n))


def _region_key(n: int, s: int, g: int) -> int:
    k = n // 2
    points = [s - k + t for t in range(g + 1)] + [s + t for t in range(g + 1)]
    return min((p - 1) % n + 1 for p in points)


def triangle_block(n: int, triangles: tuple[int, ...]) -> ShellingOrder:
    surface = Surface.mobius(n)
    regions = sorted(((s, successor(n, triangles, s)[1]) for s in triangles),
                     key=lambda r: _region_key(n, *r))
    order = product_all([region_order(n, s, g) for s, g in regions], surface)
    return order.prefixed("DTri{" + ",".join(map(str, triangles)) + "}")


def admissible_sets(n: int) -> list[tuple[int, ...]]:
    _require_odd(n)
    return [combo
            for size in range(n, 0, -2)
            for combo in combinations(range(1, n + 1), size)
            if is_admissible(n, combo)]


def shell_ctri_odd(n: int) -> ShellingOrder:
    _require_odd(n)
    order = concat(*(triangle_block(n, t) for t in admissible_sets(n)), surface=Surface.mobius(n))
    logger.debug(f"[CONSTRUCT] mobius:{n}: {len(order)} c-triangulations (odd)")
    return order


def special_mutable_odd(facet) -> tuple[QuasiArc, ...]:
    """Arcs of a Y-block facet whose flip adds d-triangles or, staying in
    the Y-block, increases the length."""
    from ..flips.flip import flip

    facet = tuple(sorted(facet))
    n = len(facet)
    if not in_y_block(n, facet):
        raise BlockError("facet is not in the Y-block")
    surface = Surface.mobius(n)
    count = len(d_triangles(surface, facet))
    special = []
    for arc in facet:
        other, partner = flip(surface, facet, arc)
        if all(a.is_cross for a in other) and len(d_triangles(surface, other)) > count:
            special.append(arc)
        elif in_y_block(n, other) and odd_length(n, partner) > odd_length(n, arc):
            special.append(arc)
    return tuple(special)

