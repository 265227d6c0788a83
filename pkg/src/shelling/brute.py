"""Exhaustive shelling search for tiny complexes (negative controls, oracles)."""

import logging

from ..errors import CapExceededError
from .order import ShellingOrder
from .verify import _bitmasks

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_CAP = 12


def _extends(prefix: list[int], candidate: int) -> bool:
    if not prefix:
        return True
    ridges = set()
    for mask in prefix:
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            ridges.add(mask ^ low)
    restriction = 0
    bits = candidate
    while bits:
        low = bits & -bits
        bits ^= low
        if candidate ^ low in ridges:
            restriction |= low
    return not any(mask & restriction == restriction for mask in prefix)


def brute_force_shelling(facets, cap: int = DEFAULT_BRUTE_CAP, surface=None) -> ShellingOrder | None:
    """A shelling order of `facets`, or None when none exists.

    `facets` may be a Complex or any sequence of vertex tuples.
    """
    surface = getattr(facets, "surface", surface)
    facets = tuple(tuple(f) for f in getattr(facets, "facets", facets))
    if len(facets) > cap:
        raise CapExceededError(f"brute-force shelling limited to {cap} facets, got {len(facets)}")
    masks = _bitmasks(facets)
    full = (1 << len(facets)) - 1
    dead: set[int] = set()

    def search(prefix: list[int], used: int) -> list[int] | None:
        if used == full:
            return prefix
        if used in dead:
            return None
        chosen = [masks[p] for p in prefix]
        for idx in range(len(facets)):
            if used >> idx & 1 or not _extends(chosen, masks[idx]):
                continue
            found = search(prefix + [idx], used | 1 << idx)
            if found is not None:
                return found
        dead.add(used)
        return None

    found = search([], 0)
    if found is None:
        logger.info(f"[SHELL] brute force: no shelling among {len(facets)} facets")
        return None
    return ShellingOrder(tuple(facets[i] for i in found), ("brute",) * len(found), surface)
