import json
import os

import hypothesis
import pytest

from src.complex import build_complex
from src.surface import Surface, parse_facet

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


# Orders with a block moved in front of a facet it shares no ridge with.
BAD_ORDERS = {
    "mobius2_disjoint_start": ("mobius:2", [
        "C(1,2),C(2,2)", "C(1,1),P(1,1)", "C(1,1),C(1,2)",
        "C(2,2),P(2,2)", "mu,P(1,1)", "mu,P(2,2)",
    ]),
    "mobius2_cone_early": ("mobius:2", [
        "C(1,2),C(2,2)", "C(1,1),C(1,2)", "mu,P(2,2)",
        "C(1,1),P(1,1)", "C(2,2),P(2,2)", "mu,P(1,1)",
    ]),
    "polygon6_opposite_fans": ("polygon:6", [
        "P(1,3),P(1,4),P(1,5)", "P(2,4),P(2,5),P(2,6)", "P(1,4),P(2,4),P(4,6)",
    ]),
    "polygon6_single_shared_arc": ("polygon:6", [
        "P(1,3),P(1,4),P(1,5)", "P(1,4),P(2,4),P(4,6)",
    ]),
}


def _facet_texts(surface: str, facets: list[str]) -> list[list[str]]:
    """The listed facets first, then every other facet of the complex."""
    parsed = Surface.parse(surface)
    head = [parse_facet(parsed, f) for f in facets]
    tail = [f for f in build_complex(parsed).facets if f not in head]
    return [[str(a) for a in f] for f in head + tail]


@pytest.fixture
def bad_order_files(tmp_path):
    """name -> (path of an order file that is not a shelling, surface)"""
    files = {}
    for name, (surface, facets) in BAD_ORDERS.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({"surface": surface, "order": _facet_texts(surface, facets)}))
        files[name] = (path, surface)
    return files


@pytest.fixture
def mobius2_order():
    """Constructed shelling of mobius:2, worked out by hand."""
    surface = Surface.mobius(2)
    return [parse_facet(surface, f) for f in (
        "C(1,2),C(2,2)", "C(1,1),C(1,2)", "C(1,1),P(1,1)",
        "C(2,2),P(2,2)", "mu,P(1,1)", "mu,P(2,2)",
    )]
