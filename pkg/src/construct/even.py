"""
Quasi-Arc Toolkit - c-Triangulations, n even
--------------------------------------------
Blocks D_I over non-empty sets I of diagonals, |I| from k = n/2 down to 1, I
lexicographic within a size. Consecutive diagonals C(a, a+k), C(a', a'+k)
(a < a' in 1..k, cyclically) cut out a region that is a D-block of M_{2g},
g = a' − a (the last gap wraps round: a_1 + k − a_r). Each region carries
the X1 upper shelling followed by the X2 lower shelling of that smaller
D-block, relabelled into place; regions combine by the lexicographic
product, smallest boundary label first.
"""

import logging
from itertools import combinations

from ..errors import ParityError
from ..shelling.combinators import concat, product_all
from ..shelling.order import ShellingOrder
from ..surface.model import QuasiArc, Surface
from .dblock import cross_mod, dblock_order

logger = logging.getLogger(__name__)


def dblock_coords(m: int, arc: QuasiArc) -> tuple[int, int]:
    """Lattice coordinates (i, j), i ≤ h+1 ≤ j, of a c-arc of M_m, m = 2h,
    compatible with the diagonal C(1, h+1)."""
    h = m // 2
    a, b = arc.i, arc.j
    if a == b == 1:
        return 1, m + 1
    if a <= h + 1 <= b:
        return a, b
    return b, m + 1


def region_order(n: int, start: int, gap: int) -> ShellingOrder:
    """D-block order of M_{2·gap} placed between diagonals at `start`, `start+gap`."""
    k = n // 2
    local = dblock_order(2 * gap)
    local_diag = QuasiArc.cross(1, gap + 1)

    def place(arc: QuasiArc) -> QuasiArc | None:
        if arc == local_diag:
            return None
        i, j = dblock_coords(2 * gap, arc)
        return cross_mod(n, start + i - 1, start + k + j - gap - 1)

    facets = tuple(tuple(sorted(place(a) for a in f if a != local_diag)) for f in local.facets)
    return ShellingOrder(facets, local.provenance, Surface.mobius(n))


def _region_key(n: int, start: int, gap: int) -> int:
    k = n // 2
    points = [start + s for s in range(gap + 1)] + [start + k + s for s in range(gap + 1)]
    return min((p - 1) % n + 1 for p in points)


def diagonal_block(n: int, reps: tuple[int, ...]) -> ShellingOrder:
    """Order of the block D_I, I = {C(a, a+k) : a ∈ reps}, reps sorted in 1..k."""
    k = n // 2
    surface = Surface.mobius(n)
    gaps = [b - a for a, b in zip(reps, reps[1:])] + [reps[0] + k - reps[-1]]
    regions = sorted(zip(reps, gaps), key=lambda r: _region_key(n, *r))
    diags = tuple(QuasiArc.cross(a, a + k) for a in reps)
    fixed = ShellingOrder((diags,), ("",), surface)
    order = product_all([fixed] + [region_order(n, a, g) for a, g in regions], surface)
    label = "D{" + ",".join(str(d) for d in diags) + "}"
    return order.prefixed(label)


def shell_ctri_even(n: int) -> ShellingOrder:
    if n < 2 or n % 2:
        raise ParityError(f"shell_ctri_even needs an even n ≥ 2, got {n}")
    k = n // 2
    blocks = [diagonal_block(n, reps)
              for size in range(k, 0, -1)
              for reps in combinations(range(1, k + 1), size)]
    order = concat(*blocks, surface=Surface.mobius(n))
    logger.debug(f"[CONSTRUCT] mobius:{n}: {len(order)} c-triangulations (even)")
    return order
