"""
Quasi-Arc Toolkit - Surface Model
---------------------------------
Marked surfaces and the quasi-arcs drawn on them.

Surfaces
--------
polygon:m   - disk with m ≥ 3 marked boundary points
cylinder:n  - annulus, n ≥ 1 marked points on the outer boundary only
mobius:n    - Möbius strip, n ≥ 1 marked points on its single boundary

Marked points are labelled 1..n clockwise. The open interval (i, j) means the
points strictly after i and strictly before j going clockwise; for i == j it
is every point except i.

Arcs
----
mu      - the one-sided closed curve (Möbius only)
P(i,j)  - plain arc; on cylinder/Möbius the disk side is the clockwise
          interval [i, j] and the pair is ordered (P(i,i) is the loop around
          the crosscap or the inner boundary); on a polygon it is an
          unordered diagonal stored with i < j
C(a,b)  - arc through the crosscap, unordered, stored with a ≤ b
"""

import re
from dataclasses import dataclass
from enum import Enum, IntEnum

from ..errors import ArcError, SurfaceError


class SurfaceKind(str, Enum):
    POLYGON = "polygon"
    CYLINDER = "cylinder"
    MOBIUS = "mobius"


@dataclass(frozen=True, order=True)
class Surface:
    kind: SurfaceKind
    n: int

    def __post_init__(self):
        if not isinstance(self.kind, SurfaceKind):
            raise SurfaceError(f"unknown surface kind {self.kind!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise SurfaceError(f"marked point count must be an integer, got {self.n!r}")
        minimum = 3 if self.kind is SurfaceKind.POLYGON else 1
        if self.n < minimum:
            raise SurfaceError(f"{self.kind.value} needs at least {minimum} marked points, got {self.n}")

    @classmethod
    def polygon(cls, m: int) -> "Surface":
        return cls(SurfaceKind.POLYGON, m)

    @classmethod
    def cylinder(cls, n: int) -> "Surface":
        return cls(SurfaceKind.CYLINDER, n)

    @classmethod
    def mobius(cls, n: int) -> "Surface":
        return cls(SurfaceKind.MOBIUS, n)

    @classmethod
    def parse(cls, text: str) -> "Surface":
        """Parse 'polygon:m', 'cylinder:n' or 'mobius:n'."""
        kind, sep, count = text.strip().partition(":")
        if not sep:
            raise SurfaceError(f"surface must look like 'mobius:3', got {text!r}")
        try:
            surface_kind = SurfaceKind(kind.strip().lower())
        except ValueError:
            raise SurfaceError(f"unknown surface kind {kind!r}") from None
        try:
            n = int(count)
        except ValueError:
            raise SurfaceError(f"marked point count must be an integer, got {count!r}") from None
        return cls(surface_kind, n)

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.n}"

    @property
    def is_polygon(self) -> bool:
        return self.kind is SurfaceKind.POLYGON

    @property
    def is_mobius(self) -> bool:
        return self.kind is SurfaceKind.MOBIUS

    @property
    def points(self) -> range:
        return range(1, self.n + 1)

    @property
    def rank(self) -> int:
        """Number of arcs in every facet."""
        if self.kind is SurfaceKind.POLYGON:
            return self.n - 3
        if self.kind is SurfaceKind.CYLINDER:
            return self.n - 1
        return self.n

    def label(self, x: int) -> int:
        """Reduce any integer to a marked point label in 1..n."""
        return (x - 1) % self.n + 1

    def span(self, i: int, j: int) -> int:
        """Boundary edges covered going clockwise from i to j (n for i == j)."""
        return (j - i) % self.n or self.n

    def inside(self, x: int, i: int, j: int) -> bool:
        """True iff x lies in the open clockwise interval (i, j)."""
        return 0 < (x - i) % self.n < self.span(i, j)


class ArcKind(IntEnum):
    ONE_SIDED = 0
    PLAIN = 1
    CROSS = 2


_ARC_RE = re.compile(r"^\s*([PC])\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


@dataclass(frozen=True, order=True)
class QuasiArc:
    kind: ArcKind
    i: int = 0
    j: int = 0

    @classmethod
    def mu(cls) -> "QuasiArc":
        return cls(ArcKind.ONE_SIDED)

    @classmethod
    def plain(cls, i: int, j: int) -> "QuasiArc":
        return cls(ArcKind.PLAIN, i, j)

    @classmethod
    def cross(cls, a: int, b: int) -> "QuasiArc":
        return cls(ArcKind.CROSS, min(a, b), max(a, b))

    @classmethod
    def parse(cls, text: str) -> "QuasiArc":
        """Parse 'mu', 'P(i,j)' or 'C(a,b)' without surface validation."""
        if text.strip() == "mu":
            return cls.mu()
        m = _ARC_RE.match(text)
        if not m:
            raise ArcError(f"cannot parse arc {text!r}")
        tag, i, j = m.group(1), int(m.group(2)), int(m.group(3))
        return cls.plain(i, j) if tag == "P" else cls.cross(i, j)

    @property
    def is_loop(self) -> bool:
        return self.kind is not ArcKind.ONE_SIDED and self.i == self.j

    @property
    def is_one_sided(self) -> bool:
        return self.kind is ArcKind.ONE_SIDED

    @property
    def is_plain(self) -> bool:
        return self.kind is ArcKind.PLAIN

    @property
    def is_cross(self) -> bool:
        return self.kind is ArcKind.CROSS

    def __str__(self) -> str:
        if self.kind is ArcKind.ONE_SIDED:
            return "mu"
        tag = "P" if self.kind is ArcKind.PLAIN else "C"
        return f"{tag}({self.i},{self.j})"

    def __repr__(self) -> str:
        return str(self)


MU = QuasiArc.mu()


def is_valid_arc(surface: Surface, arc: QuasiArc) -> bool:
    """Validity of an (already canonical) arc on a surface."""
    n = surface.n
    if arc.kind is ArcKind.ONE_SIDED:
        return surface.is_mobius and arc.i == 0 and arc.j == 0
    if not (1 <= arc.i <= n and 1 <= arc.j <= n):
        return False
    if arc.kind is ArcKind.CROSS:
        return surface.is_mobius and arc.i <= arc.j
    if surface.is_polygon:
        return arc.i < arc.j and arc.j - arc.i >= 2 and n - (arc.j - arc.i) >= 2
    return surface.span(arc.i, arc.j) >= 2


def canonical_arc(surface: Surface, arc: QuasiArc) -> QuasiArc:
    """Canonical representative on `surface` (polygon diagonals become i < j)."""
    if surface.is_polygon and arc.kind is ArcKind.PLAIN and arc.i > arc.j:
        return QuasiArc.plain(arc.j, arc.i)
    return arc


def parse_arc(surface: Surface, text: str) -> QuasiArc:
    """Parse and validate an arc on `surface`."""
    arc = canonical_arc(surface, QuasiArc.parse(text))
    if not is_valid_arc(surface, arc):
        raise ArcError(f"{arc} is not a quasi-arc of {surface}")
    return arc


def require_arc(surface: Surface, arc: QuasiArc) -> QuasiArc:
    if not isinstance(arc, QuasiArc) or not is_valid_arc(surface, arc):
        raise ArcError(f"{arc!r} is not a quasi-arc of {surface}")
    return arc


Facet = tuple[QuasiArc, ...]


def make_facet(arcs) -> Facet:
    """Canonical sorted tuple of distinct arcs."""
    return tuple(sorted(set(arcs)))


def facet_text(facet) -> list[str]:
    return [str(a) for a in facet]


def parse_facet(surface: Surface, text) -> Facet:
    """Parse a facet from a list of arc strings or from 'C(1,1),P(1,2)' text."""
    if isinstance(text, str):
        parts = re.findall(r"mu|[PC]\s*\(\s*-?\d+\s*,\s*-?\d+\s*\)", text)
        leftover = re.sub(r"mu|[PC]\s*\(\s*-?\d+\s*,\s*-?\d+\s*\)|[\s,{}\[\]]", "", text)
        if leftover:
            raise ArcError(f"cannot parse facet {text!r}")
    else:
        parts = list(text)
    return make_facet(parse_arc(surface, p) for p in parts)
