"""
Quasi-Arc Toolkit - D-Blocks (n = 2k even)
------------------------------------------
The D-block holds the c-triangulations of M_n containing the diagonal
C(1, k+1) and no other diagonal. Lifting every c-arc to a lattice node
(X, Y) with 0 ≤ Y − X ≤ n, a c-triangulation is a monotone staircase, and the
D-block splits into two halves:

  X1  the excursion below the diagonal level, from (1, k+1) via (2, k+1) to
      (k+1, 2k+1); arc lengths ≤ k
  X2  its image under the half-turn x → x + k; arc lengths ≥ k+2

X1 facets correspond to Dyck words w of semilength k−1 (U = X step,
D = Y step along the interior nodes).
"""

import logging
from functools import partial

from ..errors import BlockError, ModelError, ParityError
from ..surface.classify import diagonals
from ..surface.model import QuasiArc, Surface
from ..shelling.order import ShellingOrder
from .paths import upper_word_order

logger = logging.getLogger(__name__)


def _half(n: int) -> int:
    if n < 2 or n % 2:
        raise ParityError(f"D-blocks need an even n ≥ 2, got {n}")
    return n // 2


def cross_mod(n: int, a: int, b: int) -> QuasiArc:
    return QuasiArc.cross((a - 1) % n + 1, (b - 1) % n + 1)


def even_length(n: int, arc: QuasiArc) -> int:
    """Length of a c-arc compatible with the diagonal C(1, k+1)."""
    k = _half(n)
    if not arc.is_cross:
        raise BlockError(f"{arc} is not a c-arc")
    a, b = arc.i, arc.j
    if a == b == 1:
        return n + 1
    if a <= k + 1 <= b:
        return b - a + 1
    if a == 1 and b <= k + 1:
        return n + 2 - b
    raise BlockError(f"{arc} crosses the diagonal C(1,{k + 1})")


def half_turn(n: int, arc: QuasiArc) -> QuasiArc:
    k = _half(n)
    return cross_mod(n, arc.i + k, arc.j + k)


def x1_facet(n: int, word: str) -> tuple[QuasiArc, ...]:
    """X1 facet of the Dyck word `word` (semilength k−1)."""
    k = _half(n)
    x, y = 2, k + 1
    arcs = [QuasiArc.cross(1, k + 1), QuasiArc.cross(x, y)]
    for step in word:
        if step == "U":
            x += 1
        else:
            y += 1
        arcs.append(cross_mod(n, x, y))
    return tuple(sorted(arcs))


def x1_word(n: int, facet) -> str:
    """Inverse of x1_facet."""
    k = _half(n)
    present = set(facet)
    x, y = 2, k + 1
    steps = []
    while (x, y) != (k + 1, 2 * k):
        up = cross_mod(n, x + 1, y) in present and x + 1 <= k + 1
        right = cross_mod(n, x, y + 1) in present and y + 1 <= 2 * k
        if up == right:
            raise BlockError(f"facet is not an X1 staircase at node ({x},{y})")
        if up:
            x += 1
            steps.append("U")
        else:
            y += 1
            steps.append("D")
    return "".join(steps)


def t_max(n: int) -> tuple[QuasiArc, ...]:
    """{C(1,k+1)} ∪ {C(i, k+i−1) : 2 ≤ i ≤ k+1} ∪ {C(i, k+i−2) : 3 ≤ i ≤ k+1}."""
    k = _half(n)
    arcs = {QuasiArc.cross(1, k + 1)}
    arcs.update(cross_mod(n, i, k + i - 1) for i in range(2, k + 2))
    arcs.update(cross_mod(n, i, k + i - 2) for i in range(3, k + 2))
    return tuple(sorted(arcs))


def t_min(n: int) -> tuple[QuasiArc, ...]:
    return tuple(sorted(half_turn(n, a) for a in t_max(n)))


def max_arcs(n: int) -> tuple[QuasiArc, ...]:
    k = _half(n)
    return tuple(sorted(cross_mod(n, i, i + k - 1) for i in range(2, k + 2)))


def min_arcs(n: int) -> tuple[QuasiArc, ...]:
    return tuple(sorted(half_turn(n, a) for a in max_arcs(n)))


def classify_block(n: int, facet) -> str:
    """'X1' or 'X2' for a facet of the D-block of M_n."""
    k = _half(n)
    surface = Surface.mobius(n)
    facet = tuple(facet)
    diag = QuasiArc.cross(1, k + 1)
    if len(facet) != n or any(not a.is_cross for a in facet):
        raise BlockError("not a c-triangulation")
    if diagonals(surface, facet) != (diag,):
        raise BlockError(f"D-block facets contain exactly the diagonal {diag}")
    if cross_mod(n, 2, k + 1) in facet:
        side = "X1"
    elif cross_mod(n, 1, k + 2) in facet:
        side = "X2"
    else:
        raise BlockError("facet holds neither X1 nor X2 base arc")
    for arc in facet:
        if arc == diag:
            continue
        length = even_length(n, arc)
        if (side == "X1" and length > k) or (side == "X2" and length < k + 2):
            logger.error(f"[CONSTRUCT] mobius:{n}: {arc} has length {length} in {side}")
            raise ModelError(f"{arc} of length {length} violates the {side} length separation")
    return side


def in_dblock(n: int, facet) -> str | None:
    try:
        return classify_block(n, facet)
    except BlockError:
        return None


def upper_shell_X1(n: int) -> ShellingOrder:
    k = _half(n)
    order = upper_word_order(k - 1)
    facets = tuple(x1_facet(n, w) for w, _ in order)
    labels = tuple(f"X1/{lab}" if lab else "X1" for _, lab in order)
    return ShellingOrder(facets, labels, Surface.mobius(n))


def lower_shell_X2(n: int) -> ShellingOrder:
    upper = upper_shell_X1(n)
    facets = tuple(tuple(sorted(half_turn(n, a) for a in f)) for f in upper.facets)
    labels = tuple("X2" + p[2:] for p in upper.provenance)
    return ShellingOrder(facets, labels, upper.surface)


def dblock_order(n: int) -> ShellingOrder:
    """X1 upper shelling followed by X2 lower shelling."""
    upper = upper_shell_X1(n)
    lower = lower_shell_X2(n)
    return ShellingOrder(upper.facets + lower.facets, upper.provenance + lower.provenance, upper.surface)


def even_length_fn(n: int):
    return partial(even_length, n)


def special_mutable_even(facet) -> tuple[QuasiArc, ...]:
    """Arcs of a D-block facet whose flip creates a diagonal or moves the
    length away from the diagonal level inside the same half."""
    from ..flips.flip import flip

    facet = tuple(sorted(facet))
    n = len(facet)
    side = classify_block(n, facet)
    surface = Surface.mobius(n)
    special = []
    for arc in facet:
        other, partner = flip(surface, facet, arc)
        if partner.is_cross and partner.j - partner.i == n // 2:
            special.append(arc)
        elif in_dblock(n, other) == side:
            change = even_length(n, partner) - even_length(n, arc)
            if (side == "X1" and change > 0) or (side == "X2" and change < 0):
                special.append(arc)
    return tuple(special)


def length_sum(n: int, facet) -> int:
    """Total length of a D-block facet; t_max and t_min are its extremes on X1 and X2."""
    return sum(even_length(n, a) for a in facet)
