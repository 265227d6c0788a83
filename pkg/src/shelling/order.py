"""
Quasi-Arc Toolkit - Shelling Orders
-----------------------------------
An ordered facet list with one provenance label per facet. Facets are sorted
tuples of vertices; vertices are usually QuasiArc values, but the verifiers
and brute-force search accept any hashable vertices.
"""

import json
from dataclasses import dataclass

from ..errors import ArcError, ShellingError
from ..surface.model import Surface, parse_facet


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[tuple, ...]
    provenance: tuple[str, ...]
    surface: Surface | None = None

    def __post_init__(self):
        if len(self.facets) != len(self.provenance):
            raise ShellingError(f"{len(self.facets)} facets but {len(self.provenance)} provenance labels")

    @classmethod
    def of(cls, facets, label: str = "", surface: Surface | None = None) -> "ShellingOrder":
        facets = tuple(tuple(f) for f in facets)
        return cls(facets, (label,) * len(facets), surface)

    def __len__(self) -> int:
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    @property
    def ground(self) -> set:
        return {v for f in self.facets for v in f}

    def with_surface(self, surface: Surface) -> "ShellingOrder":
        return ShellingOrder(self.facets, self.provenance, surface)

    def prefixed(self, prefix: str) -> "ShellingOrder":
        labels = tuple(f"{prefix}/{p}" if p else prefix for p in self.provenance)
        return ShellingOrder(self.facets, labels, self.surface)

    def to_dict(self) -> dict:
        return {
            "surface": str(self.surface) if self.surface else None,
            "order": [[str(a) for a in f] for f in self.facets],
            "provenance": list(self.provenance),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, data: dict, surface: Surface | None = None) -> "ShellingOrder":
        if surface is None:
            if not data.get("surface"):
                raise ArcError("shelling document names no surface")
            surface = Surface.parse(data["surface"])
        try:
            raw = data["order"]
        except (KeyError, TypeError):
            raise ArcError("shelling document has no 'order' list") from None
        facets = tuple(parse_facet(surface, f) for f in raw)
        labels = data.get("provenance") or [""] * len(facets)
        return cls(facets, tuple(str(p) for p in labels), surface)
