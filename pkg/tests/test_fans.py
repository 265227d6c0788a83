import pytest

from src.complex import build_complex
from src.construct import polygon_order, shell_cylinder, shell_cylinder_loop, shell_polygon
from src.errors import SurfaceError
from src.shelling import cone, product_order, relabel, verify_shelling, verify_shelling_mutation, verify_shelling_topological
from src.surface import MU, QuasiArc, Surface, catalan

P = QuasiArc.plain


def _check(order, surface: Surface):
    facets = [frozenset(f) for f in order.facets]
    assert len(facets) == len(set(facets))
    assert set(facets) == {frozenset(f) for f in build_complex(surface).facets}
    assert verify_shelling_mutation(order)


@pytest.mark.parametrize("m", range(3, 13))
def test_polygon_shelling(m):
    order = shell_polygon(m)
    assert len(order) == catalan(m - 2)
    _check(order, Surface.polygon(m))
    if m <= 9:
        assert verify_shelling_topological(order)


def test_polygon_shelling_starts_with_the_fan():
    order = shell_polygon(6)
    assert order.facets[0] == (P(1, 3), P(1, 4), P(1, 5))
    assert order.provenance[0] == "Apex{5,4,3,2}"


def test_polygon_base_edge():
    assert shell_polygon(5, base_edge=(2, 3)).facets[0] == (P(1, 3), P(3, 5))
    assert shell_polygon(5, base_edge=(3, 2)).facets[0] == (P(1, 3), P(3, 5))
    with pytest.raises(SurfaceError):
        shell_polygon(5, base_edge=(1, 3))


def test_polygon_order_on_arbitrary_vertices():
    order = polygon_order(["u", "v", "w", "x"], lambda a, b: a + b)
    assert order.facets == (("uw",), ("vx",))


@pytest.mark.parametrize("n", range(1, 11))
def test_cylinder_shelling(n):
    order = shell_cylinder(n)
    assert len(order) == n * catalan(n - 1)
    _check(order, Surface.cylinder(n))
    if n <= 7:
        assert verify_shelling_topological(order)


@pytest.mark.parametrize("n", range(2, 7))
def test_every_cylinder_facet_has_exactly_one_loop(n):
    for facet in shell_cylinder(n):
        assert sum(a.is_loop for a in facet) == 1


def test_cylinder_loop_block():
    block = shell_cylinder_loop(3, 2)
    assert all(P(2, 2) in f for f in block)
    assert len(block) == 2
    assert block.provenance[0].startswith("Loop{2}")
    with pytest.raises(SurfaceError):
        shell_cylinder_loop(3, 4)


def _tagged(order, tag: str):
    return relabel(order, lambda arc: f"{tag}:{arc}")


def test_product_of_pentagon_and_square_shellings():
    prod = product_order(_tagged(shell_polygon(5), "A"), _tagged(shell_polygon(4), "B"))
    assert len(prod) == 5 * 2
    assert all(len(f) == 2 + 1 for f in prod)
    assert verify_shelling(prod)


@pytest.mark.parametrize("left, right", [
    ("polygon:5", "cylinder:2"),
    ("polygon:6", "cylinder:3"),
    ("cylinder:3", "polygon:4"),
    ("cylinder:2", "cylinder:3"),
])
def test_products_of_shellings_are_shellings(left, right):
    orders = []
    for tag, text in (("A", left), ("B", right)):
        surface = Surface.parse(text)
        base = shell_polygon(surface.n) if surface.is_polygon else shell_cylinder(surface.n)
        orders.append(_tagged(base, tag))
    prod = product_order(*orders)
    assert len(prod) == len(orders[0]) * len(orders[1])
    assert verify_shelling_mutation(prod)
    assert verify_shelling_topological(prod)


def test_cone_over_cylinder3_shelling():
    coned = cone(shell_cylinder(3), MU, surface=Surface.mobius(3))
    assert len(coned) == 6
    assert all(MU in f for f in coned)
    assert verify_shelling_mutation(coned)
    assert verify_shelling_topological(coned)
