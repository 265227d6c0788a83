"""
Quasi-Arc Toolkit - Order Combinators
-------------------------------------
product_order  join of two complexes on disjoint vertex sets, pairs in
               lexicographic order (first order major)
cone           apex added to every facet
concat         blocks one after another
relabel        push an order through a vertex map
"""

from itertools import product

from ..errors import ShellingError
from ..surface.model import Surface
from .order import ShellingOrder


def _join_label(a: str, b: str) -> str:
    if a and b:
        return f"{a}&{b}"
    return a or b


def product_order(first: ShellingOrder, second: ShellingOrder,
                  surface: Surface | None = None) -> ShellingOrder:
    overlap = first.ground & second.ground
    if overlap:
        raise ShellingError(f"product of orders with overlapping ground sets: {sorted(map(str, overlap))}")
    facets = []
    labels = []
    for (fa, la), (fb, lb) in product(zip(first.facets, first.provenance),
                                      zip(second.facets, second.provenance)):
        facets.append(tuple(sorted(fa + fb)))
        labels.append(_join_label(la, lb))
    return ShellingOrder(tuple(facets), tuple(labels), surface or first.surface or second.surface)


def product_all(orders, surface: Surface | None = None) -> ShellingOrder:
    """Left-nested product; the first order is the most significant."""
    result = ShellingOrder(((),), ("",), surface)
    for order in orders:
        result = product_order(result, order, surface)
    return result


def cone(order: ShellingOrder, apex, surface: Surface | None = None) -> ShellingOrder:
    if apex in order.ground:
        raise ShellingError(f"cone apex {apex} already belongs to the order")
    facets = tuple(tuple(sorted(f + (apex,))) for f in order.facets)
    labels = tuple(f"Cone{{{apex}}}/{p}" if p else f"Cone{{{apex}}}" for p in order.provenance)
    return ShellingOrder(facets, labels, surface or order.surface)


def concat(*orders: ShellingOrder, surface: Surface | None = None) -> ShellingOrder:
    facets: list[tuple] = []
    labels: list[str] = []
    seen: set = set()
    for order in orders:
        for facet, label in zip(order.facets, order.provenance):
            key = frozenset(facet)
            if key in seen:
                raise ShellingError(f"concatenation repeats facet {[str(a) for a in facet]}")
            seen.add(key)
            facets.append(facet)
            labels.append(label)
    if surface is None:
        surface = next((o.surface for o in orders if o.surface is not None), None)
    return ShellingOrder(tuple(facets), tuple(labels), surface)


def relabel(order: ShellingOrder, mapping, surface: Surface | None = None) -> ShellingOrder:
    """Apply `mapping(vertex) -> vertex | None` to every vertex; None drops it."""
    facets = []
    for facet in order.facets:
        moved = (mapping(v) for v in facet)
        facets.append(tuple(sorted(v for v in moved if v is not None)))
    return ShellingOrder(tuple(facets), order.provenance, surface or order.surface)
