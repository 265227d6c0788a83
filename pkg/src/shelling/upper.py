"""
Upper and lower shellings of a block family: every X-mutable arc whose flip
raises (resp. lowers) the length must flip to an earlier facet of the order.

X-mutability is read from `in_family` when given (membership in the full
block, e.g. one D-block half); a flip that stays in the block but is missing
from the order is then an error. Without it the order is its own family and
flips leaving it are not X-mutable.
"""

from typing import Callable

from ..errors import QuasiArcError, ShellingError
from ..flips.flip import flip
from ..surface.model import Facet, QuasiArc
from .order import ShellingOrder

LengthFn = Callable[[QuasiArc], int]
FamilyFn = Callable[[Facet], bool]


def _directed_shelling(order: ShellingOrder, length_fn: LengthFn, sign: int,
                       in_family: FamilyFn | None) -> bool:
    if order.surface is None:
        raise ShellingError("upper/lower shelling checks need an order bound to a surface")
    position = {facet: idx for idx, facet in enumerate(order.facets)}
    if in_family is not None:
        for idx, facet in enumerate(order.facets):
            if not in_family(facet):
                raise ShellingError(f"facet at position {idx + 1} lies outside the block family")
    for idx, facet in enumerate(order.facets):
        for arc in facet:
            other, partner = flip(order.surface, facet, arc)
            if in_family is None:
                if other not in position:
                    continue
            elif not in_family(other):
                continue
            elif other not in position:
                raise ShellingError(f"flip of {arc} at position {idx + 1} stays in the block "
                                    f"but leaves the ordered family")
            try:
                change = length_fn(partner) - length_fn(arc)
            except QuasiArcError as e:
                raise ShellingError(f"flip of {arc} stays in the family but has no length: {e}") from e
            if change * sign > 0 and position[other] >= idx:
                return False
    return True


def is_upper_shelling(order: ShellingOrder, length_fn: LengthFn, in_family: FamilyFn | None = None) -> bool:
    return _directed_shelling(order, length_fn, +1, in_family)


def is_lower_shelling(order: ShellingOrder, length_fn: LengthFn, in_family: FamilyFn | None = None) -> bool:
    return _directed_shelling(order, length_fn, -1, in_family)
