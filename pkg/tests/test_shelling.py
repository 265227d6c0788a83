import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.complex import build_complex
from src.errors import CapExceededError, ShellingError
from src.shelling import (
    ShellingOrder, brute_force_shelling, concat, cone, product_all, product_order, relabel,
    restriction_sets, verify_shelling, verify_shelling_mutation, verify_shelling_topological,
)
from src.surface import Surface

TRIANGLE = [("a", "b"), ("b", "c"), ("a", "c")]
TWO_EDGES = [("a", "b"), ("c", "d")]
BOWTIE = [("a", "b", "c"), ("c", "d", "e")]


def _order(facets) -> ShellingOrder:
    return ShellingOrder.of(facets)


def test_triangle_boundary_is_shelled_in_any_order():
    for facets in (TRIANGLE, TRIANGLE[::-1]):
        assert verify_shelling_topological(_order(facets))
        assert verify_shelling_mutation(_order(facets))


def test_disconnected_pair_fails_at_second_facet():
    topo = verify_shelling_topological(_order(TWO_EDGES))
    assert (topo.ok, topo.k, topo.reason) == (False, 2, "empty")
    mut = verify_shelling_mutation(_order(TWO_EDGES))
    assert (mut.ok, mut.k, mut.j) == (False, 2, 1)


def test_bowtie_meets_in_a_vertex():
    topo = verify_shelling_topological(_order(BOWTIE))
    assert (topo.ok, topo.k, topo.reason) == (False, 2, "dimension")
    assert not verify_shelling(_order(BOWTIE))


def test_verdict_serialisation():
    assert verify_shelling(_order(TRIANGLE)).to_dict() == {"ok": True}
    assert verify_shelling(_order(TWO_EDGES)).to_dict() == {
        "ok": False, "k": 2, "j": 1, "reason": "restriction contained in an earlier facet",
    }


def test_restriction_sets_of_triangle_boundary():
    # vertex bits follow first appearance: a=1, b=2, c=4
    assert restriction_sets(_order(TRIANGLE)) == [0, 0b100, 0b101]


def test_verifiers_reject_duplicates_and_mixed_dimensions():
    with pytest.raises(ShellingError):
        verify_shelling_topological(_order([("a", "b"), ("b", "a")]))
    with pytest.raises(ShellingError):
        verify_shelling_mutation(_order([("a", "b", "c"), ("c", "d")]))


def test_provenance_length_must_match():
    with pytest.raises(ShellingError):
        ShellingOrder((("a",),), ("x", "y"))


def test_product_order_is_lexicographic():
    left = ShellingOrder.of([("a",), ("b",)], "L")
    right = ShellingOrder.of([("x",), ("y",)], "R")
    prod = product_order(left, right)
    assert prod.facets == (("a", "x"), ("a", "y"), ("b", "x"), ("b", "y"))
    assert set(prod.provenance) == {"L&R"}
    assert verify_shelling(prod)
    with pytest.raises(ShellingError):
        product_order(left, left)


def test_product_all_starts_from_the_empty_facet():
    assert product_all([]).facets == ((),)
    assert product_all([_order([("a",), ("b",)])]).facets == (("a",), ("b",))


def test_cone_concat_relabel():
    coned = cone(_order(TRIANGLE), "z")
    assert all("z" in f for f in coned)
    assert coned.provenance[0] == "Cone{z}"
    assert verify_shelling(coned)
    with pytest.raises(ShellingError):
        cone(coned, "z")
    with pytest.raises(ShellingError):
        concat(_order(TRIANGLE), _order(TRIANGLE[:1]))
    moved = relabel(_order(TRIANGLE), lambda v: None if v == "a" else v.upper())
    assert moved.facets == (("B",), ("B", "C"), ("C",))


def test_brute_force_finds_or_refutes():
    assert brute_force_shelling(TWO_EDGES) is None
    found = brute_force_shelling(TRIANGLE)
    assert found is not None and verify_shelling(found)
    assert found.provenance == ("brute",) * 3
    with pytest.raises(CapExceededError):
        brute_force_shelling([(i,) for i in range(13)])


def test_brute_force_on_mobius2_complex():
    cx = build_complex(Surface.mobius(2))
    found = brute_force_shelling(cx)
    assert found is not None
    assert found.surface == cx.surface
    assert verify_shelling_topological(found)


def test_order_round_trip_through_dict(mobius2_order):
    order = ShellingOrder(tuple(mobius2_order), ("",) * 6, Surface.mobius(2))
    again = ShellingOrder.from_dict(order.to_dict())
    assert again.facets == order.facets
    assert again.surface == order.surface


@settings(max_examples=40)
@given(st.sampled_from(["mobius:2", "polygon:6", "cylinder:3"]).flatmap(
    lambda text: st.permutations(build_complex(Surface.parse(text)).facets)))
def test_verifiers_agree_on_random_orders(facets):
    order = _order(facets)
    assert verify_shelling_topological(order).ok == verify_shelling_mutation(order).ok


@settings(max_examples=40)
@given(st.permutations(build_complex(Surface.polygon(5)).facets))
def test_every_order_of_a_pentagon_cycle_that_passes_has_connected_prefixes(facets):
    order = _order(facets)
    if verify_shelling_mutation(order):
        for k in range(1, len(facets)):
            assert any(set(facets[k]) & set(facets[j]) for j in range(k))
