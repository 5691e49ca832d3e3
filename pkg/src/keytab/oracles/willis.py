"""Willis's scanning method for both keys."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..tableau import KeyTableau, Tableau


def ewis(xs: Sequence[int]) -> list[int]:
    """Earliest weakly increasing subsequence."""
    return [xs[i] for i in ewis_indices(xs)]


def ewis_indices(xs: Sequence[int]) -> list[int]:
    out: list[int] = []
    for i, x in enumerate(xs):
        if not out or x >= xs[out[-1]]:
            out.append(i)
    return out


def right_key_column_passes(columns: Sequence[Sequence[int]], *, ops: Counter | None = None) -> list[list[int]]:
    """The ewis of the bottom entries, pass after pass, until the first
    column is used up.  The last member of each pass is the next key entry
    (from the bottom up)."""
    cols = [list(c) for c in columns]
    passes = []
    while cols and cols[0]:
        live = [j for j, c in enumerate(cols) if c]
        bottoms = [cols[j][-1] for j in live]
        if ops is not None:
            ops["comparisons"] += len(bottoms)
        picked = ewis_indices(bottoms)
        passes.append([bottoms[k] for k in picked])
        for k in picked:
            cols[live[k]].pop()
        if ops is not None:
            ops["cell_moves"] += len(picked)
    return passes


def willis_right_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    columns = s.columns()
    key = []
    for j in range(len(columns)):
        passes = right_key_column_passes(columns[j:], ops=ops)
        key.append(sorted(p[-1] for p in passes))
    return KeyTableau.from_columns(key, s.n)


def left_key_column_lines(columns: Sequence[Sequence[int]], *, ops: Counter | None = None) -> list[list[int]]:
    """Lines drawn from the last column leftward until the last column is
    used up; each line is listed from the last column to the first."""
    cols = [list(c) for c in columns]
    lines = []
    while cols and cols[-1]:
        line = []
        rows = []
        bound = None
        for col in reversed(cols):
            k = len(col) - 1
            if bound is not None:
                while col[k] > bound:
                    k -= 1
                    if ops is not None:
                        ops["comparisons"] += 1
            bound = col[k]
            line.append(col[k])
            rows.append(k)
        for col, k in zip(reversed(cols), rows):
            del col[k]
        if ops is not None:
            ops["cell_moves"] += len(rows)
        lines.append(line)
    return lines


def willis_left_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    columns = s.columns()
    key = []
    for j in range(1, len(columns) + 1):
        lines = left_key_column_lines(columns[:j], ops=ops)
        key.append(sorted(line[-1] for line in lines))
    return KeyTableau.from_columns(key, s.n)
