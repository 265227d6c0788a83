"""
Quasi-Arc Toolkit - Shelling Verifiers
--------------------------------------
Two independent checks of the same property.

topological  for every k ≥ 2, the faces of T_k lying in an earlier facet
             form a pure complex of dimension dim(T_k) − 1; only the
             maximal faces T_j ∩ T_k are inspected
mutation     for every k and j < k some earlier T_i shares a ridge with T_k
             and T_j ∩ T_k ⊆ T_i ∩ T_k; evaluated through the restriction
             set R_k (arcs of T_k whose removal gives an earlier ridge):
             the order fails at k iff some earlier facet contains R_k

Failures are reported with 1-based positions.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass

from ..errors import ShellingError
from .order import ShellingOrder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    k: int | None = None
    j: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "k": self.k, "j": self.j, "reason": self.reason}


OK = Verdict(True)


def _bitmasks(facets) -> list[int]:
    index: dict = {}
    masks = []
    for facet in facets:
        mask = 0
        for v in facet:
            mask |= 1 << index.setdefault(v, len(index))
        masks.append(mask)
    return masks


def _require_distinct(masks: list[int]):
    seen: dict[int, int] = {}
    for pos, mask in enumerate(masks):
        if mask in seen:
            raise ShellingError(f"duplicate facet at positions {seen[mask] + 1} and {pos + 1}")
        seen[mask] = pos


def _popcount(x: int) -> int:
    return bin(x).count("1")


def verify_shelling_topological(order: ShellingOrder) -> Verdict:
    masks = _bitmasks(order.facets)
    _require_distinct(masks)
    for k in range(1, len(masks)):
        current = masks[k]
        faces = sorted({masks[j] & current for j in range(k)}, key=_popcount, reverse=True)
        maximal: list[int] = []
        for face in faces:
            if not any(face & kept == face for kept in maximal):
                maximal.append(face)
        expected = _popcount(current) - 1
        sizes = {_popcount(f) for f in maximal}
        if sizes == {expected}:
            continue
        if maximal == [0]:
            reason = "empty"
        elif len(sizes) > 1:
            reason = "impure"
        else:
            reason = "dimension"
        logger.info(f"[SHELL] topological check fails at k={k + 1}: {reason}")
        return Verdict(False, k + 1, None, reason)
    return OK


def restriction_sets(order: ShellingOrder) -> list[int]:
    """Bitmask of R_k per position (vertex bits in first-appearance order)."""
    masks = _bitmasks(order.facets)
    first_holder: dict[int, int] = {}
    out = []
    for k, mask in enumerate(masks):
        restriction = 0
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            if first_holder.get(mask ^ low, k) < k:
                restriction |= low
        out.append(restriction)
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            first_holder.setdefault(mask ^ low, k)
    return out


def verify_shelling_mutation(order: ShellingOrder) -> Verdict:
    masks = _bitmasks(order.facets)
    _require_distinct(masks)
    if len({_popcount(m) for m in masks}) > 1:
        raise ShellingError("mutation verifier needs a pure facet list")
    occurrences: dict[int, list[int]] = defaultdict(list)
    for k, restriction in enumerate(restriction_sets(order)):
        if k > 0:
            j = _earliest_container(restriction, occurrences, masks)
            if j is not None:
                logger.info(f"[SHELL] mutation check fails at k={k + 1}, j={j + 1}")
                return Verdict(False, k + 1, j + 1, "restriction contained in an earlier facet")
        bits = masks[k]
        while bits:
            low = bits & -bits
            bits ^= low
            occurrences[low].append(k)
    return OK


def _earliest_container(restriction: int, occurrences: dict, masks: list[int]) -> int | None:
    if restriction == 0:
        return 0
    bits = []
    rest = restriction
    while rest:
        low = rest & -rest
        rest ^= low
        bits.append(low)
    rarest = min(bits, key=lambda b: len(occurrences.get(b, ())))
    for pos in occurrences.get(rarest, ()):
        if masks[pos] & restriction == restriction:
            return pos
    return None


def verify_shelling(order: ShellingOrder) -> Verdict:
    """Mutation-form verdict (the fast path used by certificates)."""
    return verify_shelling_mutation(order)
