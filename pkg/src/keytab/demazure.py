"""Demazure and opposite Demazure characters as sums over tableaux.

A character is a ``Counter`` from exponent vectors ``(e_1, ..., e_n)`` to
positive integer coefficients.  Cosets of the Young subgroup of ``mu`` are
compared through their key tableaux, column by column in the dominance order.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ShapeTooTall
from .keys import left_key, right_key
from .order import subset_leq
from .tableau import Shape, Tableau, _as_parts, coset_to_key_tableau, enumerate_ssyt, weight_monomial

Character = Counter


def key_leq(k1: Tableau, k2: Tableau) -> bool:
    """Bruhat order of the cosets of two key tableaux of the same shape."""
    return all(subset_leq(a, b) for a, b in zip(k1.columns(), k2.columns()))


def _check(mu: Shape | Sequence[int], n: int) -> tuple[int, ...]:
    parts = _as_parts(mu)
    if len(parts) > n:
        raise ShapeTooTall(f"shape {parts} has more than n={n} parts")
    return parts


def demazure_character(mu: Shape | Sequence[int], tau: Sequence[int], n: int) -> Character:
    """Sum of ``x^S`` over SSYT of shape ``mu`` whose right key is below ``tau W_mu``."""
    parts = _check(mu, n)
    bound = coset_to_key_tableau(tau, parts)
    char: Character = Counter()
    for s in enumerate_ssyt(parts, n):
        if key_leq(right_key(s), bound):
            char[weight_monomial(s)] += 1
    return char


def opposite_demazure_character(mu: Shape | Sequence[int], tau: Sequence[int], n: int) -> Character:
    """Sum of ``x^S`` over SSYT whose left key is above ``tau W_mu``."""
    parts = _check(mu, n)
    bound = coset_to_key_tableau(tau, parts)
    char: Character = Counter()
    for s in enumerate_ssyt(parts, n):
        if key_leq(bound, left_key(s)):
            char[weight_monomial(s)] += 1
    return char


def full_character(mu: Shape | Sequence[int], n: int) -> Character:
    """Sum of ``x^S`` over every SSYT of shape ``mu`` (the Schur polynomial)."""
    return Counter(weight_monomial(s) for s in enumerate_ssyt(_check(mu, n), n))


def evaluate(char: Character, point: Sequence[int]) -> int:
    total = 0
    for exps, coeff in char.items():
        term = coeff
        for x, e in zip(point, exps):
            term *= x**e
        total += term
    return total


def format_character(char: Character) -> list[str]:
    """Terms sorted by exponent vector (descending), e.g. ``2*x1^2*x3``."""
    out = []
    for exps in sorted(char, reverse=True):
        factors = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps, start=1) if e]
        mono = "*".join(factors) or "1"
        coeff = char[exps]
        out.append(mono if coeff == 1 else f"{coeff}*{mono}")
    return out


def contains(big: Character, small: Character) -> bool:
    return all(big[k] >= v for k, v in small.items())


@dataclass
class SanityReport:
    longest_is_full: bool
    monotone: bool
    symmetric: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.longest_is_full and self.monotone and self.symmetric


def distinct_cosets(parts: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """One representative per coset of the Young subgroup of ``parts``."""
    seen = {}
    for w in itertools.permutations(range(1, n + 1)):
        k = coset_to_key_tableau(w, parts)
        seen.setdefault(k, w)
    return list(seen.values())


def character_sanity(mu: Shape | Sequence[int], n: int) -> SanityReport:
    parts = _check(mu, n)
    full = full_character(parts, n)
    failures = []
    longest = tuple(range(n, 0, -1))
    longest_ok = demazure_character(parts, longest, n) == full
    if not longest_ok:
        failures.append("character at the longest coset differs from the full sum")

    reps = distinct_cosets(parts, n)
    keys = {w: coset_to_key_tableau(w, parts) for w in reps}
    chars = {w: demazure_character(parts, w, n) for w in reps}
    monotone = True
    for u, v in itertools.permutations(reps, 2):
        if key_leq(keys[u], keys[v]) and not contains(chars[v], chars[u]):
            monotone = False
            failures.append(f"character of {u} not contained in that of {v}")

    symmetric = True
    for i in range(n - 1):
        swapped = Counter()
        for exps, coeff in full.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = coeff
        if swapped != full:
            symmetric = False
            failures.append(f"full character not symmetric under swapping x{i + 1}, x{i + 2}")
    return SanityReport(longest_ok, monotone, symmetric, failures)
