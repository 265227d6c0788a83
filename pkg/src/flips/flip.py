"""
Quasi-Arc Toolkit - Flips
-------------------------
Removing one arc from a facet leaves exactly one other census arc that
completes it again. The completion is found by an exhaustive scan over the
compatibility bitmasks, and uniqueness is checked rather than assumed.
"""

import logging

from ..errors import FacetError, ModelError
from ..surface.compat import arc_mask, compatibility_table, mask_arcs
from ..surface.model import Facet, QuasiArc, Surface

logger = logging.getLogger(__name__)


def flip_mask(surface: Surface, facet_mask: int, bit: int) -> tuple[int, int]:
    """Bitmask form of flip: (new facet mask, bit of the new arc)."""
    _, _, masks = compatibility_table(surface)
    rest = facet_mask & ~(1 << bit)
    candidates = (1 << len(masks)) - 1
    bits = rest
    while bits:
        low = bits & -bits
        candidates &= masks[low.bit_length() - 1]
        bits ^= low
    candidates &= ~facet_mask
    if candidates == 0 or candidates & (candidates - 1):
        found = bin(candidates).count("1")
        logger.error(f"[FLIP] {surface}: {found} completions for bit {bit} of {facet_mask:#x}")
        raise ModelError(f"{surface}: expected exactly one flip completion, found {found}")
    return rest | candidates, candidates.bit_length() - 1


def flip(surface: Surface, facet: Facet, arc: QuasiArc) -> tuple[Facet, QuasiArc]:
    """Replace `arc` in `facet` by its unique flip partner."""
    if arc not in facet:
        raise FacetError(f"{arc} is not in facet {list(map(str, facet))}")
    arcs, index, _ = compatibility_table(surface)
    new_mask, new_bit = flip_mask(surface, arc_mask(surface, facet), index[arc])
    return mask_arcs(surface, new_mask), arcs[new_bit]
