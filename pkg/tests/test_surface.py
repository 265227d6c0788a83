import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.errors import ArcError, ParityError, SurfaceError
from src.surface import (
    MU, QuasiArc, Surface, SurfaceKind, b_arcs, brute_force_census, census, census_size,
    compatible, d_triangles, diagonal, diagonals, is_c_arc, is_d_triangle, is_diagonal,
    parse_arc, parse_facet,
)

P, C = QuasiArc.plain, QuasiArc.cross


@pytest.mark.parametrize("text, kind, n", [
    ("polygon:6", SurfaceKind.POLYGON, 6),
    ("cylinder:1", SurfaceKind.CYLINDER, 1),
    (" mobius:3 ", SurfaceKind.MOBIUS, 3),
])
def test_parse_surface(text, kind, n):
    surface = Surface.parse(text)
    assert (surface.kind, surface.n) == (kind, n)
    assert str(surface) == text.strip()


@pytest.mark.parametrize("text", ["polygon:2", "mobius:0", "torus:3", "mobius", "mobius:x", "cylinder:-1"])
def test_parse_surface_rejects(text):
    with pytest.raises(SurfaceError):
        Surface.parse(text)


def test_parse_arc_forms():
    assert QuasiArc.parse("mu") == MU
    assert QuasiArc.parse("P(2,1)") == P(2, 1)
    assert QuasiArc.parse("C(3,1)") == C(1, 3)
    assert str(C(3, 1)) == "C(1,3)"


def test_parse_arc_canonicalises_polygon_diagonals():
    assert parse_arc(Surface.polygon(6), "P(5,2)") == P(2, 5)


@pytest.mark.parametrize("surface, text", [
    ("polygon:6", "P(1,2)"),      # boundary edge
    ("polygon:6", "C(1,3)"),      # no crosscap
    ("cylinder:3", "mu"),
    ("cylinder:3", "P(1,2)"),     # span 1
    ("mobius:3", "P(1,4)"),
    ("mobius:3", "Q(1,2)"),
])
def test_parse_arc_rejects(surface, text):
    with pytest.raises(ArcError):
        parse_arc(Surface.parse(surface), text)


def test_parse_facet_text_and_list():
    surface = Surface.mobius(2)
    assert parse_facet(surface, "C(1,2), C(2,2)") == (C(1, 2), C(2, 2))
    assert parse_facet(surface, ["P(1,1)", "mu"]) == (MU, P(1, 1))
    with pytest.raises(ArcError):
        parse_facet(surface, "C(1,2); junk")


@pytest.mark.parametrize("text", [f"polygon:{m}" for m in range(3, 10)]
                         + [f"cylinder:{n}" for n in range(1, 8)]
                         + [f"mobius:{n}" for n in range(1, 8)])
def test_census_matches_closed_form_and_brute_force(text):
    surface = Surface.parse(text)
    arcs = census(surface)
    assert len(arcs) == census_size(surface)
    assert arcs.arcs == brute_force_census(surface, surface.n + 2).arcs
    assert list(arcs) == sorted(arcs)


def test_mobius2_census():
    assert census(Surface.mobius(2)).to_text() == ["mu", "P(1,1)", "P(2,2)", "C(1,1)", "C(1,2)", "C(2,2)"]


@pytest.mark.parametrize("x, y, expected", [
    (MU, P(1, 1), True),
    (MU, C(1, 1), False),
    (P(1, 1), P(2, 2), False),
    (P(1, 1), C(1, 1), True),
    (P(1, 1), C(1, 2), False),
    (C(1, 1), C(2, 2), False),
    (C(1, 1), C(1, 2), True),
    (C(2, 2), C(1, 2), True),
])
def test_mobius2_compatibility(x, y, expected):
    surface = Surface.mobius(2)
    assert compatible(surface, x, y) is expected
    assert compatible(surface, y, x) is expected


def test_polygon_compatibility_is_non_crossing():
    surface = Surface.polygon(6)
    assert compatible(surface, P(1, 3), P(1, 4))
    assert compatible(surface, P(1, 3), P(4, 6))
    assert not compatible(surface, P(1, 4), P(2, 5))


def test_compatible_rejects_foreign_arcs():
    with pytest.raises(ArcError):
        compatible(Surface.cylinder(3), MU, P(1, 1))


@st.composite
def arc_pairs(draw):
    surface = Surface.mobius(draw(st.integers(1, 7)))
    arcs = census(surface).arcs
    return surface, draw(st.sampled_from(arcs)), draw(st.sampled_from(arcs))


@given(arc_pairs())
def test_compatibility_is_symmetric_and_reflexive(pair):
    surface, x, y = pair
    assert compatible(surface, x, y) == compatible(surface, y, x)
    assert compatible(surface, x, x)


@pytest.mark.parametrize("text", [f"polygon:{m}" for m in range(3, 9)]
                         + [f"cylinder:{n}" for n in range(1, 9)]
                         + [f"mobius:{n}" for n in range(1, 8)]
                         + [pytest.param("mobius:8", marks=pytest.mark.slow)])
def test_compatibility_over_every_census_pair(text):
    surface = Surface.parse(text)
    arcs = census(surface).arcs
    for i, x in enumerate(arcs):
        assert compatible(surface, x, x)
        for y in arcs[i + 1:]:
            assert compatible(surface, x, y) == compatible(surface, y, x), (str(x), str(y))


def test_is_c_arc_only_on_mobius():
    surface = Surface.mobius(3)
    assert is_c_arc(surface, C(1, 1))
    assert not is_c_arc(surface, P(1, 3))
    assert not is_c_arc(surface, MU)
    with pytest.raises(SurfaceError):
        is_c_arc(Surface.cylinder(3), P(1, 3))


def test_diagonals_even_only():
    surface = Surface.mobius(6)
    assert diagonal(surface, 5) == C(2, 5)
    assert is_diagonal(surface, C(1, 4))
    assert not is_diagonal(surface, C(1, 3))
    assert diagonals(surface, [C(1, 4), C(2, 3), P(1, 3), C(3, 6)]) == (C(1, 4), C(3, 6))
    with pytest.raises(ParityError):
        diagonal(Surface.mobius(5), 1)


def test_d_triangles_odd_only():
    surface = Surface.mobius(3)
    assert d_triangles(surface, [C(1, 2), C(1, 3), C(2, 3)]) == (1, 2, 3)
    assert is_d_triangle(surface, [C(1, 1), C(1, 2), C(1, 3)]) == 1
    assert is_d_triangle(surface, [C(1, 1), C(2, 2)]) is None
    assert d_triangles(Surface.mobius(1), [C(1, 1)]) == (1,)
    with pytest.raises(ParityError):
        is_d_triangle(Surface.mobius(4), [C(1, 2)])


def test_b_arcs_are_plain_arcs_flipping_to_crossing_arcs():
    surface = Surface.mobius(2)
    assert list(b_arcs(surface, (C(1, 1), P(1, 1)))) == [P(1, 1)]
    with pytest.raises(ArcError):
        b_arcs(surface, (MU, P(1, 1)))
