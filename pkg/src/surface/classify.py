"""Arc classes on the Möbius strip: c-arcs, diagonals, d-triangles, b-arcs."""

from ..errors import ArcError, ParityError, SurfaceError
from .census import ArcSet
from .model import QuasiArc, Surface, require_arc


def _require_mobius(surface: Surface):
    if not surface.is_mobius:
        raise SurfaceError(f"{surface} is not a Möbius strip")


def is_c_arc(surface: Surface, arc: QuasiArc) -> bool:
    _require_mobius(surface)
    return require_arc(surface, arc).is_cross


def diagonal(surface: Surface, a: int) -> QuasiArc:
    """The diagonal c-arc starting at `a` (n even)."""
    _require_mobius(surface)
    if surface.n % 2:
        raise ParityError(f"diagonals need an even number of marked points, got {surface}")
    return QuasiArc.cross(surface.label(a), surface.label(a + surface.n // 2))


def is_diagonal(surface: Surface, arc: QuasiArc) -> bool:
    _require_mobius(surface)
    if surface.n % 2:
        raise ParityError(f"diagonals need an even number of marked points, got {surface}")
    require_arc(surface, arc)
    return arc.is_cross and arc.j - arc.i == surface.n // 2


def diagonals(surface: Surface, arcs) -> tuple[QuasiArc, ...]:
    return tuple(a for a in arcs if a.is_cross and is_diagonal(surface, a))


def d_triangle_arcs(surface: Surface, s: int) -> tuple[QuasiArc, QuasiArc]:
    """(a_s, b_s) = (C(s, s+k), C(s, s+k+1)) for n = 2k+1."""
    _require_mobius(surface)
    if surface.n % 2 == 0:
        raise ParityError(f"d-triangles need an odd number of marked points, got {surface}")
    k = surface.n // 2
    return (QuasiArc.cross(surface.label(s), surface.label(s + k)),
            QuasiArc.cross(surface.label(s), surface.label(s + k + 1)))


def d_triangles(surface: Surface, arcs) -> tuple[int, ...]:
    """Special vertices of every d-triangle formed by `arcs`."""
    present = set(arcs)
    return tuple(s for s in surface.points
                 if all(a in present for a in d_triangle_arcs(surface, s)))


def is_d_triangle(surface: Surface, arcs) -> int | None:
    """Special vertex of the d-triangle in `arcs`, or None.

    For n = 1 both sides collapse to C(1,1).
    """
    arcs = [require_arc(surface, a) for a in arcs]
    found = d_triangles(surface, arcs)
    if surface.n % 2 == 0:
        raise ParityError(f"d-triangles need an odd number of marked points, got {surface}")
    return found[0] if found else None


def b_arcs(surface: Surface, facet) -> ArcSet:
    """Plain arcs of a triangulation whose flip is a c-arc."""
    from ..flips.flip import flip

    _require_mobius(surface)
    if any(a.is_one_sided for a in facet):
        raise ArcError("b-arcs are defined on triangulations; facet contains mu")
    found = tuple(a for a in facet if a.is_plain and flip(surface, facet, a)[1].is_cross)
    return ArcSet(surface, found)
