"""
Quasi-Arc Toolkit - Flip Graph
------------------------------
Vertices are the facets of a complex (numbered in canonical facet order),
edges join facets related by a single flip. Built on networkx.
"""

import logging
from dataclasses import dataclass

import networkx as nx

from ..errors import ModelError
from ..surface.compat import arc_mask, compatibility_table, mask_arcs
from ..surface.model import Facet, Surface
from .flip import flip_mask

logger = logging.getLogger(__name__)


@dataclass
class FlipGraph:
    surface: Surface
    facets: tuple[Facet, ...]
    graph: nx.Graph

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.graph.edges)

    def is_regular(self, degree: int | None = None) -> bool:
        degree = self.surface.rank if degree is None else degree
        return all(d == degree for _, d in self.graph.degree)

    def is_connected(self) -> bool:
        return len(self.facets) <= 1 or nx.is_connected(self.graph)

    def to_dot(self) -> str:
        lines = ["graph flips {", f'  label="{self.surface}";']
        for idx, facet in enumerate(self.facets):
            label = ", ".join(str(a) for a in facet) or "∅"
            lines.append(f'  {idx} [label="{label}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "surface": str(self.surface),
            "vertices": [[str(a) for a in f] for f in self.facets],
            "edges": [list(e) for e in self.edges],
            "regular": self.is_regular(),
            "connected": self.is_connected(),
        }


def flip_graph(surface: Surface, facets=None, induced: bool = False) -> FlipGraph:
    """Flip graph over `facets` (default: every facet of the surface's complex).

    With `induced`, flips leaving `facets` are dropped instead of rejected.
    """
    if facets is None:
        from ..complex.core import facets_by_clique
        facets = facets_by_clique(surface)
    facets = tuple(facets)
    _, index, _ = compatibility_table(surface)
    position = {arc_mask(surface, f): idx for idx, f in enumerate(facets)}
    graph = nx.Graph()
    graph.add_nodes_from(range(len(facets)))
    for mask, idx in position.items():
        for arc in facets[idx]:
            new_mask, _ = flip_mask(surface, mask, index[arc])
            other = position.get(new_mask)
            if other is None:
                if induced:
                    continue
                raise ModelError(f"{surface}: flip of {arc} leaves the facet list "
                                 f"({list(map(str, mask_arcs(surface, new_mask)))})")
            graph.add_edge(idx, other)
    logger.info(f"[FLIP] {surface}: graph with {graph.number_of_nodes()} vertices, "
                f"{graph.number_of_edges()} edges")
    return FlipGraph(surface, facets, graph)


def is_flip_connected(surface: Surface) -> bool:
    return flip_graph(surface).is_connected()


def flip_graph_isomorphic(a: FlipGraph, b: FlipGraph) -> bool:
    return nx.is_isomorphic(a.graph, b.graph)
