"""Shared fixtures, strategies and independent oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from keytab.tableau import Tableau, conjugate, parse_tableau, row_insert

LEFT_EXAMPLE = "1 2 3 6 6\n2 3 6 7\n3 5 7 8\n6 7\n7"
SMALL_EXAMPLE = "1 3 3 6 8\n4 5\n5"
CHAIN_EXAMPLE = "1 1 2 2 3 7\n2 3 4 5\n4 5\n5 8\n6"
LEFT_KEY_ROWS = ((1, 1, 2, 2, 3), (2, 2, 3, 3), (3, 3, 7, 7), (6, 7), (7,))


@pytest.fixture
def left_example() -> Tableau:
    return parse_tableau(LEFT_EXAMPLE, 9)


@pytest.fixture
def small_example() -> Tableau:
    return parse_tableau(SMALL_EXAMPLE, 9)


@pytest.fixture
def chain_example() -> Tableau:
    return parse_tableau(CHAIN_EXAMPLE, 9)


def insertion_tableau(word, n: int) -> Tableau:
    rows: list[list[int]] = []
    for x in word:
        row_insert(rows, x)
    return Tableau(tuple(tuple(r) for r in rows), n)


@st.composite
def ssyt(draw, max_n: int = 6, max_size: int = 10, min_size: int = 0):
    n = draw(st.integers(1, max_n))
    word = draw(st.lists(st.integers(1, n), min_size=min_size, max_size=max_size))
    return insertion_tableau(word, n)


@st.composite
def permutations(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


def hook_content_count(parts, n: int) -> int:
    """Number of SSYT of shape ``parts`` with entries <= n, by the hook-content formula."""
    parts = [x for x in parts if x]
    cols = conjugate(parts)
    value = Fraction(1)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j) + (cols[j] - i) - 1
            value *= Fraction(n + j - i, hook)
    return int(value)


def length(w) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


@lru_cache(maxsize=None)
def bruhat_closure(n: int) -> dict[tuple[int, ...], frozenset[tuple[int, ...]]]:
    """For each w, everything reachable upward by length-increasing transpositions."""
    perms = list(itertools.permutations(range(1, n + 1)))
    up = {}
    for w in perms:
        succ = []
        for i, j in itertools.combinations(range(n), 2):
            if w[i] < w[j]:
                v = list(w)
                v[i], v[j] = v[j], v[i]
                succ.append(tuple(v))
        up[w] = succ
    above: dict[tuple[int, ...], frozenset] = {}
    for w in sorted(perms, key=length, reverse=True):
        reach = {w}
        for v in up[w]:
            reach |= above[v]
        above[w] = frozenset(reach)
    return above


def max_decreasing_subsequences(word) -> tuple[int, set[tuple[int, ...]]]:
    """Length of the longest weakly decreasing subsequence and all value tuples attaining it."""
    L = len(word)
    best = [1] * L
    for i in range(L):
        for j in range(i):
            if word[j] >= word[i]:
                best[i] = max(best[i], best[j] + 1)
    top = max(best, default=0)
    found: set[tuple[int, ...]] = set()

    def extend(start: int, acc: tuple[int, ...]) -> None:
        if len(acc) == top:
            found.add(acc)
            return
        need = top - len(acc)
        for k in range(start, L):
            if (not acc or word[k] <= acc[-1]) and L - k >= need:
                extend(k + 1, acc + (word[k],))

    extend(0, ())
    return top, found
