"""Deodhar lifts to the parabolic subgroups ``S_p x S_{n-p}``.

Given a p-subset ``Y`` of ``1..n`` and a permutation ``w``, the maximal lift
is the largest ``v <= w`` (Bruhat order) whose first p letters form ``Y``; the
minimal lift is the smallest ``v >= w`` with that property.  Both are built
letter by letter: the first p letters by a greedy choice from ``Y`` and the
remaining ones by feeding ``w_{p+1}, ..., w_n`` through a pair-of-subsets
state machine (``subproc_P`` for the maximal lift, ``subproc_Q`` for the
minimal one).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Literal, Sequence

from .errors import (
    EnumerationTooLarge,
    GammaInA,
    NoCandidate,
    NonUniqueExtremum,
    OrderViolated,
    PreconditionViolated,
)
from .order import as_subset, bruhat_leq, coset_geq, coset_leq, subset_leq
from .tableau import Permutation

MAX_BRUTE_FORCE_N = 7


@dataclass(frozen=True)
class SubsetPairState:
    """Two equal-size subsets ``a`` and ``b`` with a recorded inequality.

    ``orientation`` is ``"P"`` when ``b <= a`` (maximal lift) and ``"Q"``
    when ``a <= b`` (minimal lift).
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    orientation: Literal["P", "Q"]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_subset(self.a))
        object.__setattr__(self, "b", as_subset(self.b))
        if len(self.a) != len(self.b):
            raise OrderViolated(f"|a|={len(self.a)} differs from |b|={len(self.b)}")
        if self.orientation == "P":
            ok = subset_leq(self.b, self.a)
        elif self.orientation == "Q":
            ok = subset_leq(self.a, self.b)
        else:
            raise ValueError(f"orientation must be 'P' or 'Q', not {self.orientation!r}")
        if not ok:
            rel = "b <= a" if self.orientation == "P" else "a <= b"
            raise OrderViolated(f"{rel} fails for a={self.a}, b={self.b}")


def _drop_common(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    common = set(a) & set(b)
    return [x for x in a if x not in common], [x for x in b if x not in common]


def _p_output(a: Sequence[int], b: Sequence[int], gamma: int) -> int:
    a2 = sorted([*a, gamma])
    for q, bq in enumerate(b):
        if bq > a2[q]:
            return a2[q]
    return a2[len(b)]  # b_{t+1} is +infinity


def _q_output(a: Sequence[int], b: Sequence[int], gamma: int) -> int:
    a2 = sorted([*a, gamma])
    for q in range(len(b), 0, -1):
        if a2[q] > b[q - 1]:
            return a2[q]
    return a2[0]  # b_0 is 0, below everything


def subproc_P(
    state: SubsetPairState, gamma: int, *, drop_common: bool = False
) -> tuple[int, SubsetPairState]:
    """Feed ``gamma`` to the maximal-lift state machine.

    Let ``A'' = a + {gamma}`` and q be least with ``b_q > A''_q`` (reading
    ``b_{t+1}`` as infinity).  The output is ``A''_q``; the new state is
    ``(A'', b + {output})``.
    """
    if state.orientation != "P":
        raise OrderViolated("subproc_P needs a state with b <= a")
    if gamma in state.a:
        raise GammaInA(f"gamma={gamma} already in a={state.a}")
    a, b = (_drop_common(state.a, state.b) if drop_common else (state.a, state.b))
    out = _p_output(a, b, gamma)
    return out, SubsetPairState(state.a + (gamma,), state.b + (out,), "P")


def subproc_Q(
    state: SubsetPairState, gamma: int, *, drop_common: bool = False
) -> tuple[int, SubsetPairState]:
    """Feed ``gamma`` to the minimal-lift state machine.

    Let ``A'' = a + {gamma}`` and q be greatest with ``A''_q > b_{q-1}``
    (reading ``b_0`` as 0).  The output is ``A''_q``.
    """
    if state.orientation != "Q":
        raise OrderViolated("subproc_Q needs a state with a <= b")
    if gamma in state.a:
        raise GammaInA(f"gamma={gamma} already in a={state.a}")
    a, b = (_drop_common(state.a, state.b) if drop_common else (state.a, state.b))
    out = _q_output(a, b, gamma)
    return out, SubsetPairState(state.a + (gamma,), state.b + (out,), "Q")


def subproc_Q_form(a2: Iterable[int], b: Iterable[int]) -> int:
    """``Q(A'', B)``: run ``subproc_Q`` with any ``gamma`` in ``A''`` such
    that ``A'' - {gamma} <= B``.  The answer does not depend on the choice."""
    a2, b = as_subset(a2), as_subset(b)
    if len(a2) != len(b) + 1:
        raise OrderViolated(f"|A''| must be |B| + 1, got {len(a2)} and {len(b)}")
    for gamma in a2:
        rest = tuple(x for x in a2 if x != gamma)
        if subset_leq(rest, b):
            return _q_output(rest, b, gamma)
    raise OrderViolated(f"no gamma in {a2} with A'' - gamma <= {b}")


def _check_lift_args(p: int, y: Iterable[int], w: Sequence[int]) -> tuple[tuple[int, ...], Permutation]:
    y = as_subset(y)
    w = Permutation(w)
    if len(y) != p:
        raise PreconditionViolated(f"|Y|={len(y)} but p={p}")
    if y and (y[0] < 1 or y[-1] > len(w)):
        raise PreconditionViolated(f"Y={y} not inside 1..{len(w)}")
    return y, w


def max_lift(p: int, y: Iterable[int], w: Sequence[int], *, drop_common: bool = False) -> Permutation:
    """Largest ``sigma <= w`` whose first ``p`` letters form the set ``y``."""
    y, w = _check_lift_args(p, y, w)
    if not coset_leq(y, w):
        raise PreconditionViolated(f"Y={y} is not below the coset of {w}")
    sigma: list[int] = []
    left = list(y)
    for j in range(p):
        pick = max(x for x in left if x <= w[j])
        left.remove(pick)
        sigma.append(pick)
    state = SubsetPairState(w[:p], y, "P")
    for j in range(p, len(w)):
        out, state = subproc_P(state, w[j], drop_common=drop_common)
        sigma.append(out)
    return Permutation(sigma)


def min_lift(p: int, y: Iterable[int], w: Sequence[int], *, drop_common: bool = False) -> Permutation:
    """Smallest ``xi >= w`` whose first ``p`` letters form the set ``y``."""
    y, w = _check_lift_args(p, y, w)
    if not coset_geq(y, w):
        raise PreconditionViolated(f"coset of {w} is not below Y={y}")
    xi: list[int] = []
    left = list(y)
    for j in range(p):
        pick = min(x for x in left if x >= w[j])
        left.remove(pick)
        xi.append(pick)
    state = SubsetPairState(w[:p], y, "Q")
    for j in range(p, len(w)):
        out, state = subproc_Q(state, w[j], drop_common=drop_common)
        xi.append(out)
    return Permutation(xi)


def coset_members(p: int, y: Sequence[int], n: int) -> Iterable[Permutation]:
    rest = [x for x in range(1, n + 1) if x not in y]
    for head in itertools.permutations(y):
        for tail in itertools.permutations(rest):
            yield Permutation(head + tail)


def brute_force_lift(
    p: int, y: Iterable[int], w: Sequence[int], direction: Literal["min", "max"]
) -> Permutation:
    """Lift by enumerating the whole coset ``Y`` (test oracle, n <= 7)."""
    y, w = _check_lift_args(p, y, w)
    n = len(w)
    if n > MAX_BRUTE_FORCE_N:
        raise EnumerationTooLarge(f"n={n} exceeds {MAX_BRUTE_FORCE_N} ({factorial(n)} permutations)")
    if direction == "max":
        cands = [v for v in coset_members(p, y, n) if bruhat_leq(v, w)]
        above = lambda u, v: bruhat_leq(v, u)  # noqa: E731
    elif direction == "min":
        cands = [v for v in coset_members(p, y, n) if bruhat_leq(w, v)]
        above = lambda u, v: bruhat_leq(u, v)  # noqa: E731
    else:
        raise ValueError(f"direction must be 'min' or 'max', not {direction!r}")
    if not cands:
        raise NoCandidate(f"no permutation in coset {y} is comparable with {w}")
    best = [u for u in cands if all(above(u, v) for v in cands)]
    if len(best) != 1:
        raise NonUniqueExtremum(f"{len(best)} extremal elements for p={p}, Y={y}, w={w}")
    return best[0]
