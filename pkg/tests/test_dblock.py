import pytest

from src.construct import (
    c_triangulations, classify_block, dblock_order, even_length, even_length_fn, half_turn,
    in_dblock, length_sum, lower_shell_X2, max_arcs, min_arcs, special_mutable_even, t_max, t_min,
    upper_shell_X1, x1_facet, x1_word,
)
from src.errors import BlockError, ParityError, ShellingError
from src.flips import flip, flip_graph
from src.shelling import ShellingOrder, is_lower_shelling, is_upper_shelling, verify_shelling_mutation
from src.surface import QuasiArc, Surface, catalan, compatible, diagonals

C = QuasiArc.cross
EVEN = [4, 6, 8, 10]


def _dblock(n: int) -> set[frozenset]:
    diag = (C(1, n // 2 + 1),)
    surface = Surface.mobius(n)
    return {frozenset(f) for f in c_triangulations(n) if diagonals(surface, f) == diag}


def test_x1_facet_of_mobius4():
    assert x1_facet(4, "UD") == (C(1, 3), C(2, 3), C(3, 3), C(3, 4))
    assert x1_word(4, x1_facet(4, "UD")) == "UD"
    assert t_max(4) == x1_facet(4, "UD")
    assert t_min(4) == (C(1, 1), C(1, 2), C(1, 3), C(1, 4))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_dblock_order_is_the_whole_dblock(n):
    order = dblock_order(n)
    assert len(order) == 2 * catalan(n // 2 - 1)
    assert {frozenset(f) for f in order.facets} == _dblock(n)


@pytest.mark.parametrize("n", EVEN)
def test_halves_are_separated_by_length(n):
    k = n // 2
    upper = upper_shell_X1(n)
    lower = lower_shell_X2(n)
    diag = C(1, k + 1)
    assert all(classify_block(n, f) == "X1" for f in upper)
    assert all(classify_block(n, f) == "X2" for f in lower)
    assert all(even_length(n, a) <= k for f in upper for a in f if a != diag)
    assert all(even_length(n, a) >= k + 2 for f in lower for a in f if a != diag)
    assert upper.ground & lower.ground == {diag}


@pytest.mark.parametrize("n", EVEN)
def test_upper_and_lower_shelling_predicates(n):
    length = even_length_fn(n)
    assert is_upper_shelling(upper_shell_X1(n), length)
    assert is_lower_shelling(lower_shell_X2(n), length)
    assert not is_lower_shelling(upper_shell_X1(n), length) or len(upper_shell_X1(n)) == 1


@pytest.mark.parametrize("n", EVEN)
def test_extremes_are_unique(n):
    upper = [length_sum(n, f) for f in upper_shell_X1(n)]
    lower = [length_sum(n, f) for f in lower_shell_X2(n)]
    assert upper.count(max(upper)) == 1
    assert lower.count(min(lower)) == 1
    assert length_sum(n, t_max(n)) == max(upper)
    assert length_sum(n, t_min(n)) == min(lower)
    assert set(max_arcs(n)) <= set(t_max(n))
    assert set(min_arcs(n)) <= set(t_min(n))


@pytest.mark.parametrize("n", EVEN)
def test_half_turn_is_an_involution(n):
    for facet in upper_shell_X1(n):
        for arc in facet:
            assert half_turn(n, half_turn(n, arc)) == arc


@pytest.mark.parametrize("n", [4, 6, 8])
def test_dblock_alone_stalls_at_the_x2_head(n):
    # X2 meets X1 only in the diagonal; its head needs an earlier diagonal block
    upper = upper_shell_X1(n)
    assert verify_shelling_mutation(upper)
    verdict = verify_shelling_mutation(dblock_order(n))
    assert not verdict.ok
    assert verdict.k == len(upper) + 1


@pytest.mark.parametrize("n", [4, 6, 8])
def test_x2_head_flips_to_another_diagonal(n):
    surface = Surface.mobius(n)
    head = lower_shell_X2(n).facets[0]
    assert head == t_min(n)
    diag = C(1, n // 2 + 1)
    partners = [flip(surface, head, arc)[1] for arc in head]
    assert any(p != diag and p in diagonals(surface, [p]) for p in partners)


@pytest.mark.parametrize("n", [6, 8])
def test_halves_are_not_flip_adjacent(n):
    graph = flip_graph(Surface.mobius(n), dblock_order(n).facets, induced=True)
    sides = [classify_block(n, f) for f in graph.facets]
    assert all(sides[a] == sides[b] for a, b in graph.edges)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_special_mutable_arcs(n):
    surface = Surface.mobius(n)
    top = t_max(n)
    for arc in special_mutable_even(top):
        partner = flip(surface, top, arc)[1]
        assert partner.is_cross and partner.j - partner.i == n // 2
    for facet in upper_shell_X1(n):
        if facet != top:
            assert special_mutable_even(facet)


def test_classification_errors():
    assert in_dblock(4, (C(1, 2), C(2, 2), C(2, 3), C(2, 4))) is None
    with pytest.raises(BlockError):
        classify_block(4, (C(1, 1), C(1, 2)))
    with pytest.raises(BlockError):
        even_length(4, C(2, 2))
    with pytest.raises(ParityError):
        x1_facet(5, "UD")


def _upper_mutable(n: int, facet, arc) -> bool:
    other, partner = flip(Surface.mobius(n), facet, arc)
    return in_dblock(n, other) == "X1" and even_length(n, partner) > even_length(n, arc)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_special_arcs_block_every_other_diagonal(n):
    k = n // 2
    surface = Surface.mobius(n)
    others = [C(i, k + i) for i in range(2, k + 1)]
    for facet in dblock_order(n):
        special = special_mutable_even(facet)
        for diag in others:
            assert any(not compatible(surface, arc, diag) for arc in special), (facet, diag)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_missing_max_arc_has_an_upper_mutable_arc_across_it(n):
    surface = Surface.mobius(n)
    for facet in upper_shell_X1(n):
        for m in set(max_arcs(n)) - set(facet):
            assert any(_upper_mutable(n, facet, arc) and not compatible(surface, arc, m)
                       for arc in facet), (facet, m)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_directed_shellings_against_the_full_halves(n):
    length = even_length_fn(n)
    assert is_upper_shelling(upper_shell_X1(n), length, in_family=lambda f: in_dblock(n, f) == "X1")
    assert is_lower_shelling(lower_shell_X2(n), length, in_family=lambda f: in_dblock(n, f) == "X2")


def test_directed_shelling_rejects_a_partial_family():
    upper = upper_shell_X1(6)
    length = even_length_fn(6)
    in_x1 = lambda f: in_dblock(6, f) == "X1"
    head = ShellingOrder(upper.facets[:1], upper.provenance[:1], upper.surface)
    assert is_upper_shelling(head, length)
    with pytest.raises(ShellingError):
        is_upper_shelling(head, length, in_family=in_x1)
    with pytest.raises(ShellingError):
        is_upper_shelling(lower_shell_X2(6), length, in_family=in_x1)
