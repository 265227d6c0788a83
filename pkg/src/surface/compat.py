"""
Quasi-Arc Toolkit - Compatibility
---------------------------------
Closed-form rules deciding whether two quasi-arcs admit disjoint
representatives.

  mu / plain      always compatible
  mu / cross      never
  plain / plain   nested (either way, cutting before the outer start point)
                  or meeting only in endpoints
  plain / cross   neither crosscap endpoint strictly inside the disk side
  cross / cross   loops: only identical; loop at a vs (c,d): a ∈ {c,d};
                  otherwise a shared endpoint or strictly interleaving ends
  polygon         classical non-crossing diagonals
"""

from functools import lru_cache

from ..errors import ArcError
from .census import census
from .model import ArcKind, QuasiArc, Surface, require_arc


def _plain_nested(surface: Surface, outer: QuasiArc, inner: QuasiArc) -> bool:
    start = (inner.i - outer.i) % surface.n
    return start + surface.span(inner.i, inner.j) <= surface.span(outer.i, outer.j)


def _plain_disjoint(surface: Surface, x: QuasiArc, y: QuasiArc) -> bool:
    if x.is_loop or y.is_loop:
        return False
    start = (y.i - x.i) % surface.n
    return start >= surface.span(x.i, x.j) and start + surface.span(y.i, y.j) <= surface.n


def _chords_cross(x: QuasiArc, y: QuasiArc) -> bool:
    a, b, c, d = x.i, x.j, y.i, y.j
    return a < c < b < d or c < a < d < b


def _plain_cross(surface: Surface, p: QuasiArc, c: QuasiArc) -> bool:
    return not (surface.inside(c.i, p.i, p.j) or surface.inside(c.j, p.i, p.j))


def _cross_cross(surface: Surface, x: QuasiArc, y: QuasiArc) -> bool:
    if x.is_loop and y.is_loop:
        return x == y
    if x.is_loop:
        return x.i in (y.i, y.j)
    if y.is_loop:
        return y.i in (x.i, x.j)
    if {x.i, x.j} & {y.i, y.j}:
        return True
    return surface.inside(y.i, x.i, x.j) != surface.inside(y.j, x.i, x.j)


def compatible(surface: Surface, x: QuasiArc, y: QuasiArc) -> bool:
    """Whether x and y have representatives with disjoint interiors."""
    require_arc(surface, x)
    require_arc(surface, y)
    if x == y:
        return True
    if x.kind > y.kind:
        x, y = y, x
    if surface.is_polygon:
        return not _chords_cross(x, y)
    if x.kind is ArcKind.ONE_SIDED:
        return y.kind is ArcKind.PLAIN
    if x.kind is ArcKind.PLAIN and y.kind is ArcKind.PLAIN:
        return (_plain_nested(surface, x, y) or _plain_nested(surface, y, x)
                or _plain_disjoint(surface, x, y))
    if x.kind is ArcKind.PLAIN:
        return _plain_cross(surface, x, y)
    return _cross_cross(surface, x, y)


@lru_cache(maxsize=64)
def compatibility_table(surface: Surface) -> tuple[tuple[QuasiArc, ...], dict, tuple[int, ...]]:
    """Census arcs, arc → bit index, and per-arc bitmask of compatible arcs."""
    arcs = census(surface).arcs
    index = {arc: bit for bit, arc in enumerate(arcs)}
    masks = []
    for x in arcs:
        mask = 0
        for bit, y in enumerate(arcs):
            if compatible(surface, x, y):
                mask |= 1 << bit
        masks.append(mask)
    return arcs, index, tuple(masks)


def arc_mask(surface: Surface, arcs) -> int:
    _, index, _ = compatibility_table(surface)
    mask = 0
    for arc in arcs:
        try:
            mask |= 1 << index[arc]
        except KeyError:
            raise ArcError(f"{arc!r} is not a quasi-arc of {surface}") from None
    return mask


def mask_arcs(surface: Surface, mask: int) -> tuple[QuasiArc, ...]:
    arcs, _, _ = compatibility_table(surface)
    out = []
    while mask:
        low = mask & -mask
        out.append(arcs[low.bit_length() - 1])
        mask ^= low
    return tuple(out)
