import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.construct import dyck_words, is_dyck, returns, toggles, upper_word_order
from src.surface import catalan


def test_dyck_words_small():
    assert dyck_words(0) == ("",)
    assert dyck_words(3) == ("UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD")


@pytest.mark.parametrize("s", range(0, 8))
def test_dyck_word_counts(s):
    assert len(dyck_words(s)) == catalan(s)
    assert all(is_dyck(w) for w in dyck_words(s))


@pytest.mark.parametrize("word, expected", [
    ("UD", True), ("UUDD", True), ("DU", False), ("UDD", False), ("UXD", False), ("", True),
])
def test_is_dyck(word, expected):
    assert is_dyck(word) is expected


def test_returns_and_toggles():
    assert returns("UDUUDD") == (2, 6)
    assert toggles("UUDD") == ["UDUD"]
    assert toggles("UDUD") == ["UUDD"]


@given(st.integers(1, 6).flatmap(lambda s: st.sampled_from(dyck_words(s))))
def test_toggles_are_symmetric(word):
    for other in toggles(word):
        assert word in toggles(other)


def test_upper_word_order_semilength_two():
    assert upper_word_order(2) == (("UDUD", "Psi{2}"), ("UUDD", "Psi{}[Psi{}]"))


@pytest.mark.parametrize("s", range(0, 7))
def test_upper_word_order_lists_each_word_once(s):
    words = [w for w, _ in upper_word_order(s)]
    assert sorted(words) == list(dyck_words(s))
    assert words[0] == "UD" * s
