"""
Quasi-Arc Toolkit - Quasi-Arc Complex
-------------------------------------
The simplicial complex whose vertices are the census arcs and whose faces are
sets of pairwise compatible arcs.

Facets are enumerated two independent ways:
  * maximal cliques of the compatibility graph (networkx find_cliques,
    Bron–Kerbosch with pivoting)
  * breadth-first closure of a seed facet under flips

Faces are handled as integer bitmasks over the census order.
"""

import json
import logging
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..errors import CapExceededError, FacetError, ModelError
from ..flips.flip import flip_mask
from ..surface.census import ArcSet, census
from ..surface.compat import arc_mask, compatibility_table, mask_arcs
from ..surface.model import Facet, Surface, make_facet

logger = logging.getLogger(__name__)

DEFAULT_MAX_FACES = 5_000_000


@dataclass(frozen=True)
class FVector:
    counts: tuple[int, ...]  # f_{-1}, f_0, ..., f_d

    @property
    def dimension(self) -> int:
        return len(self.counts) - 2

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.counts[1:]))

    def __getitem__(self, dim: int) -> int:
        return self.counts[dim + 1]


@dataclass(frozen=True)
class Complex:
    surface: Surface
    ground: ArcSet
    facets: tuple[Facet, ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(arc_mask(self.surface, f) for f in self.facets)

    @property
    def rank(self) -> int:
        return self.surface.rank

    def __len__(self) -> int:
        return len(self.facets)

    def to_dict(self) -> dict:
        return {
            "surface": str(self.surface),
            "ground": self.ground.to_text(),
            "facets": [[str(a) for a in f] for f in self.facets],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"


def facets_by_clique(surface: Surface) -> tuple[Facet, ...]:
    """Maximal cliques of the compatibility graph, canonically sorted."""
    arcs, _, masks = compatibility_table(surface)
    rank = surface.rank
    if not arcs:
        return ((),)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(arcs)))
    for bit, mask in enumerate(masks):
        graph.add_edges_from((bit, other) for other in range(bit + 1, len(arcs)) if mask >> other & 1)
    facets = []
    for clique in nx.find_cliques(graph):
        if len(clique) != rank:
            logger.error(f"[COMPLEX] {surface}: clique of size {len(clique)}, rank is {rank}")
            raise ModelError(f"{surface}: maximal clique of size {len(clique)} (rank {rank})")
        facets.append(tuple(arcs[b] for b in sorted(clique)))
    facets.sort()
    logger.info(f"[COMPLEX] {surface}: {len(facets)} facets by clique enumeration")
    return tuple(facets)


def _require_facet(surface: Surface, seed) -> int:
    arcs, _, masks = compatibility_table(surface)
    facet = make_facet(seed)
    mask = arc_mask(surface, facet)
    common = (1 << len(arcs)) - 1
    for bit in range(len(arcs)):
        if mask >> bit & 1:
            common &= masks[bit]
    if common & mask != mask:
        raise FacetError(f"{list(map(str, facet))} is not pairwise compatible on {surface}")
    if common != mask or len(facet) != surface.rank:
        raise FacetError(f"{list(map(str, facet))} is not a maximal compatible set on {surface}")
    return mask


def facets_by_flip_bfs(surface: Surface, seed) -> tuple[Facet, ...]:
    """All facets reachable from `seed` by flips."""
    start = _require_facet(surface, seed)
    seen = {start}
    queue = deque([start])
    while queue:
        mask = queue.popleft()
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            new_mask, _ = flip_mask(surface, mask, low.bit_length() - 1)
            if new_mask not in seen:
                seen.add(new_mask)
                queue.append(new_mask)
    facets = sorted(mask_arcs(surface, m) for m in seen)
    logger.info(f"[COMPLEX] {surface}: {len(facets)} facets by flip closure")
    return tuple(facets)


def build_complex(surface: Surface, method: str = "clique", seed=None) -> Complex:
    if method == "clique":
        facets = facets_by_clique(surface)
    elif method == "flip":
        if seed is None:
            seed = facets_by_clique(surface)[0]
        facets = facets_by_flip_bfs(surface, seed)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    return Complex(surface, census(surface), facets)


def complex_from_facets(surface: Surface, facets) -> Complex:
    """Complex on `surface` with an explicit facet list (e.g. a damaged copy)."""
    return Complex(surface, census(surface), tuple(sorted(make_facet(f) for f in facets)))


def remove_facet(cx: Complex, facet) -> Complex:
    facet = make_facet(facet)
    return Complex(cx.surface, cx.ground, tuple(f for f in cx.facets if f != facet))


def f_vector(cx: Complex, max_faces: int = DEFAULT_MAX_FACES) -> FVector:
    """Face counts by downward closure, deduplicated as bitmasks."""
    faces: set[int] = set()
    for mask in cx.masks:
        sub = mask
        while True:
            if sub not in faces:
                faces.add(sub)
                if len(faces) > max_faces:
                    raise CapExceededError(f"{cx.surface}: more than {max_faces} faces")
            if sub == 0:
                break
            sub = (sub - 1) & mask
    sizes = Counter(bin(f).count("1") for f in faces)
    top = max(sizes) if sizes else 0
    return FVector(tuple(sizes.get(k, 0) for k in range(top + 1)))


def euler_characteristic(cx: Complex, max_faces: int = DEFAULT_MAX_FACES) -> int:
    return f_vector(cx, max_faces).euler_characteristic


def is_pure(cx: Complex) -> bool:
    return len({len(f) for f in cx.facets}) <= 1


def ridge_degrees(cx: Complex) -> Counter:
    degrees: Counter = Counter()
    for mask in cx.masks:
        bits = mask
        while bits:
            low = bits & -bits
            bits ^= low
            degrees[mask ^ low] += 1
    return degrees


def is_pseudomanifold(cx: Complex) -> bool:
    """Pure, and every ridge lies in exactly two facets."""
    return is_pure(cx) and all(d == 2 for d in ridge_degrees(cx).values())
