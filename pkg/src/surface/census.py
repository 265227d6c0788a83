"""
Quasi-Arc Toolkit - Census
--------------------------
Every isotopy class of quasi-arcs on a surface, in canonical order
(mu, then plain arcs by (i, j), then crosscap arcs by (a, b)).

Counts
------
polygon:m    m(m−3)/2
cylinder:n   n + n(n−2)                 (0 for n = 1)
mobius:n     1 + n + n(n+1)/2 + n(n−2)  (n ≥ 2; {mu, C(1,1)} for n = 1)
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .model import MU, QuasiArc, Surface, SurfaceKind, is_valid_arc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArcSet:
    surface: Surface
    arcs: tuple[QuasiArc, ...]

    def __iter__(self):
        return iter(self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc) -> bool:
        return arc in self.arcs

    def to_text(self) -> list[str]:
        return [str(a) for a in self.arcs]


@lru_cache(maxsize=64)
def census(surface: Surface) -> ArcSet:
    n = surface.n
    arcs: list[QuasiArc] = []
    if surface.is_mobius:
        arcs.append(MU)
    if surface.is_polygon:
        arcs.extend(QuasiArc.plain(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)
                    if n - (j - i) >= 2)
    else:
        arcs.extend(QuasiArc.plain(i, j) for i in surface.points for j in surface.points
                    if surface.span(i, j) >= 2)
    if surface.is_mobius:
        arcs.extend(QuasiArc.cross(a, b) for a in surface.points for b in range(a, n + 1))
    arcs.sort()
    logger.debug(f"[CENSUS] {surface}: {len(arcs)} arcs")
    return ArcSet(surface, tuple(arcs))


def census_size(surface: Surface) -> int:
    """Closed-form census cardinality."""
    n = surface.n
    if surface.kind is SurfaceKind.POLYGON:
        return n * (n - 3) // 2
    plain = n + n * (n - 2) if n >= 2 else 0
    if surface.kind is SurfaceKind.CYLINDER:
        return plain
    return 1 + plain + n * (n + 1) // 2


def brute_force_census(surface: Surface, bound: int | None = None) -> ArcSet:
    """Filter every encoding with labels in 1..bound through the validity rules."""
    bound = bound or surface.n + 1
    candidates = {MU}
    for i in range(0, bound + 1):
        for j in range(0, bound + 1):
            candidates.add(QuasiArc.plain(i, j))
            candidates.add(QuasiArc.cross(i, j))
    return ArcSet(surface, tuple(sorted(a for a in candidates if is_valid_arc(surface, a))))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1) if k >= 0 else 0


def expected_facet_count(surface: Surface) -> int:
    """Facet count of the complex from closed forms (used for cap checks)."""
    n = surface.n
    if surface.kind is SurfaceKind.POLYGON:
        return catalan(n - 2)
    cylinder = n * catalan(n - 1)
    if surface.kind is SurfaceKind.CYLINDER:
        return cylinder
    # |I| = r endpoint sets: 2^(r-1) c-cores times the gap-polygon fans
    triangulations = sum(2 ** (r - 1) * n * comb(2 * n - r, n) // (2 * n - r) for r in range(1, n + 1))
    return triangulations + cylinder
