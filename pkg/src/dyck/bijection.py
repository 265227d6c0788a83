"""
Quasi-Arc Toolkit - D-Block / Dyck Path Bijection
-------------------------------------------------
A D-block facet of M_n (n = 2k) is a staircase in one of the two halves.
Its coordinates are the half tag plus the Dyck word of semilength k−1
(n−2 steps) read along the staircase:

  X1   the word of the facet itself
  X2   the word of its half-turn image, which lies in X1

Facets from different halves share only the diagonal, and the tag keeps
them apart; inside a half a flip swaps one adjacent UD pair of the word.

Arc lengths fall by one for every unit of height in X1, and the half-turn
sends length L to n+2−L, so the flat word (UD)^{k−1} is the length-sum
maximum t_max in X1 and the length-sum minimum t_min in X2.
"""

import logging
from dataclasses import dataclass

import pandas as pd

from ..construct.dblock import classify_block, half_turn, x1_facet, x1_word
from ..construct.paths import dyck_words, is_dyck, toggles
from ..errors import DyckError, ParityError
from ..surface.model import QuasiArc, facet_text

logger = logging.getLogger(__name__)

HALVES = ("X1", "X2")


@dataclass(frozen=True)
class DyckPath:
    half: str
    semilength: int
    steps: str

    def __post_init__(self):
        if self.half not in HALVES:
            raise DyckError(f"unknown D-block half {self.half!r}; expected X1 or X2")
        if len(self.steps) != 2 * self.semilength:
            raise DyckError(f"path {self.steps!r} does not have semilength {self.semilength}")
        if not is_dyck(self.steps):
            raise DyckError(f"path {self.steps!r} is not balanced or dips below the baseline")

    @classmethod
    def parse(cls, text: str) -> "DyckPath":
        """Read 'X1:UUDD' (the half tag is required)."""
        half, sep, steps = text.strip().upper().partition(":")
        if not sep:
            raise DyckError(f"path {text!r} has no half tag (write X1:... or X2:...)")
        if len(steps) % 2:
            raise DyckError(f"path {text!r} has odd length")
        return cls(half, len(steps) // 2, steps)

    def __str__(self) -> str:
        return f"{self.half}:{self.steps}"


def _half_of(n: int) -> int:
    if n < 2 or n % 2:
        raise ParityError(f"the Dyck bijection needs an even n ≥ 2, got {n}")
    return n // 2


def _turn(n: int, facet) -> tuple[QuasiArc, ...]:
    return tuple(sorted(half_turn(n, a) for a in facet))


def to_dyck(facet) -> DyckPath:
    """Dyck path of a D-block facet; n is the facet size."""
    facet = tuple(sorted(facet))
    n = len(facet)
    k = _half_of(n)
    side = classify_block(n, facet)
    base = facet if side == "X1" else _turn(n, facet)
    return DyckPath(side, k - 1, x1_word(n, base))


def from_dyck(path: DyckPath | str, n: int) -> tuple[QuasiArc, ...]:
    k = _half_of(n)
    if isinstance(path, str):
        path = DyckPath.parse(path)
    if path.semilength != k - 1:
        raise DyckError(f"mobius:{n} D-block paths have semilength {k - 1}, got {path.semilength}")
    facet = x1_facet(n, path.steps)
    return facet if path.half == "X1" else _turn(n, facet)


def dyck_adjacent(p: DyckPath | str, q: DyckPath | str) -> bool:
    """True when the paths lie in the same half and differ by one UD swap."""
    p = DyckPath.parse(p) if isinstance(p, str) else p
    q = DyckPath.parse(q) if isinstance(q, str) else q
    return p.half == q.half and q.steps in toggles(p.steps)


def dblock_facets(n: int) -> tuple[tuple[QuasiArc, ...], ...]:
    """X1 facets by Dyck word, then their half-turn images."""
    k = _half_of(n)
    upper = [x1_facet(n, w) for w in dyck_words(k - 1)]
    return tuple(upper + [_turn(n, f) for f in upper])


def dyck_table(n: int) -> pd.DataFrame:
    rows = []
    for facet in dblock_facets(n):
        path = to_dyck(facet)
        rows.append({
            "facet": ",".join(facet_text(facet)),
            "block": path.half,
            "path": path.steps,
        })
    logger.debug(f"[DYCK] mobius:{n}: {len(rows)} D-block facets")
    return pd.DataFrame(rows, columns=["facet", "block", "path"])
