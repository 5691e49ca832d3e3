"""Dominance order on subsets, Bruhat order on S_n and on parabolic cosets.

Subsets of ``1..n`` are passed around as sorted tuples.  Two subsets of the
same size compare as ``E <= F`` when their sorted elements compare
componentwise.
"""

from __future__ import annotations

from typing import Iterable, Literal, Sequence

from .errors import CardinalityMismatch, SizeMismatch
from .tableau import Permutation, Shape, _as_parts


def as_subset(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(values)))


def subset_leq(e: Iterable[int], f: Iterable[int]) -> bool:
    e, f = sorted(e), sorted(f)
    if len(e) != len(f):
        raise CardinalityMismatch(f"cannot compare subsets of sizes {len(e)} and {len(f)}")
    return all(a <= b for a, b in zip(e, f))


def truncation_count(e: Iterable[int], z: int) -> int:
    """Number of elements of ``e`` that are at most ``z``."""
    return sum(1 for x in e if x <= z)


def level(e: Sequence[int], x: int) -> int:
    """1-based position of ``x`` in the sorted subset ``e``."""
    return sorted(e).index(x) + 1


def bruhat_leq(v: Sequence[int], w: Sequence[int]) -> bool:
    """Tableau criterion: every prefix set of ``v`` is dominated by that of ``w``."""
    if len(v) != len(w):
        raise SizeMismatch(f"permutations of different sizes {len(v)} and {len(w)}")
    pv: list[int] = []
    pw: list[int] = []
    for a, b in zip(v, w):
        # keep both prefixes sorted incrementally
        _insort(pv, a)
        _insort(pw, b)
        if any(x > y for x, y in zip(pv, pw)):
            return False
    return True


def _insort(xs: list[int], x: int) -> None:
    i = len(xs)
    xs.append(x)
    while i and xs[i - 1] > x:
        xs[i] = xs[i - 1]
        i -= 1
    xs[i] = x


def coset_leq(y: Iterable[int], w: Sequence[int]) -> bool:
    """``Y <= w W_p`` with ``p = |Y|``."""
    y = sorted(y)
    if y and y[-1] > len(w):
        raise SizeMismatch(f"subset {y} not inside 1..{len(w)}")
    return subset_leq(y, w[: len(y)])


def coset_geq(y: Iterable[int], w: Sequence[int]) -> bool:
    """``w W_p <= Y`` with ``p = |Y|``."""
    y = sorted(y)
    if y and y[-1] > len(w):
        raise SizeMismatch(f"subset {y} not inside 1..{len(w)}")
    return subset_leq(w[: len(y)], y)


def descent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def mu_blocks(mu: Shape | Sequence[int], n: int) -> list[range]:
    """Position blocks (0-based ranges) of the Young subgroup fixing ``mu``.

    Runs of equal nonzero parts form one block each; positions past the last
    nonzero part form a single block.
    """
    parts = _as_parts(mu)
    blocks = []
    start = 0
    for i in range(1, len(parts) + 1):
        if i == len(parts) or parts[i] != parts[start]:
            blocks.append(range(start, i))
            start = i
    if len(parts) < n:
        blocks.append(range(len(parts), n))
    return blocks


def extremal_coset_rep(
    sigma: Sequence[int], mu: Shape | Sequence[int], which: Literal["min", "max"]
) -> Permutation:
    """Bruhat-minimal or -maximal element of ``sigma W_mu``."""
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', not {which!r}")
    out = list(sigma)
    for block in mu_blocks(mu, len(sigma)):
        vals = sorted((out[i] for i in block), reverse=(which == "max"))
        for i, v in zip(block, vals):
            out[i] = v
    return Permutation(out)


def same_coset(v: Sequence[int], w: Sequence[int], mu: Shape | Sequence[int]) -> bool:
    return all(
        {v[i] for i in block} == {w[i] for i in block} for block in mu_blocks(mu, len(v))
    )
