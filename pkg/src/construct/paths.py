"""
Quasi-Arc Toolkit - Lattice Paths
---------------------------------
Dyck words over {U, D} and the recursive block order on them.

A word of semilength s decomposes at its returns to the baseline into
primitive factors U w_i D. The block order groups words by the set J of
interior return positions: larger J first, then J lexicographically; inside
a block the inner words w_i are ordered recursively and combined by the
lexicographic product with the leftmost factor major.
"""

from functools import lru_cache
from itertools import combinations, product


def is_dyck(word: str) -> bool:
    height = 0
    for step in word:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def returns(word: str) -> tuple[int, ...]:
    """Positions t (0 < t ≤ len) where the prefix of length t is balanced."""
    height = 0
    out = []
    for t, step in enumerate(word, start=1):
        height += 1 if step == "U" else -1
        if height == 0:
            out.append(t)
    return tuple(out)


def toggles(word: str) -> list[str]:
    """Dyck words reachable by swapping one adjacent UD / DU pair."""
    out = []
    for t in range(len(word) - 1):
        pair = word[t:t + 2]
        if pair in ("UD", "DU"):
            other = word[:t] + pair[::-1] + word[t + 2:]
            if is_dyck(other):
                out.append(other)
    return out


@lru_cache(maxsize=None)
def dyck_words(s: int) -> tuple[str, ...]:
    """All Dyck words of semilength s in lexicographic order (D < U)."""
    if s == 0:
        return ("",)
    words = []
    for first in range(1, s + 1):
        for inner in dyck_words(first - 1):
            for rest in dyck_words(s - first):
                words.append("U" + inner + "D" + rest)
    return tuple(sorted(words))


@lru_cache(maxsize=None)
def upper_word_order(s: int) -> tuple[tuple[str, str], ...]:
    """(word, block label) for every Dyck word of semilength s, in block order."""
    if s == 0:
        return (("", ""),)
    blocks = []
    for cuts in range(s - 1, -1, -1):
        for inner in combinations(range(1, s), cuts):
            parts = [b - a for a, b in zip((0,) + inner, inner + (s,))]
            blocks.append((inner, parts))
    out = []
    for inner, parts in blocks:
        label = "Psi{" + ",".join(str(2 * c) for c in inner) + "}"
        for factors in product(*(upper_word_order(p - 1) for p in parts)):
            word = "".join("U" + w + "D" for w, _ in factors)
            nested = "|".join(lab for _, lab in factors if lab)
            out.append((word, f"{label}[{nested}]" if nested else label))
    return tuple(out)
