"""Left and right keys through sign matrices.

Row ``i`` of the sign matrix of a tableau with columns ``C_1..C_c`` records
how column ``C_{c-i+1}`` differs from ``C_{c-i+2}`` (``C_{c+1}`` is empty):
``+1`` for a letter gained, ``-1`` for a letter lost.  A tableau is a key
exactly when its matrix has no ``-1``; the left key is obtained by removing
the ``-1`` entries one at a time.  The right key is the complement of the left
key of the complement.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..errors import NoNegativeEntry, ShapeMismatch
from ..tableau import KeyTableau, Tableau


@dataclass(frozen=True)
class SignMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def count(self, value: int) -> int:
        return sum(row.count(value) for row in self.entries)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def sign_matrix_of_columns(columns: Sequence[Sequence[int]], m: int) -> SignMatrix:
    c = len(columns)
    rows = []
    for i in range(c):
        cur = set(columns[c - 1 - i])
        nxt = set(columns[c - i]) if i > 0 else set()
        rows.append(tuple((j in cur) - (j in nxt) for j in range(1, m + 1)))
    return SignMatrix(tuple(rows))


def aval_sign_matrix(s: Tableau) -> SignMatrix:
    m = max(s.entries(), default=0)
    return sign_matrix_of_columns(s.columns(), m)


def columns_of_matrix(mat: SignMatrix) -> list[list[int]]:
    """Invert the encoding: rebuild the columns (first column first)."""
    cols: list[list[int]] = []
    cur: set[int] = set()
    for row in mat.entries:
        for j, x in enumerate(row, start=1):
            if x == 1:
                cur.add(j)
            elif x == -1:
                cur.discard(j)
        cols.append(sorted(cur))
    cols.reverse()
    return cols


def aval_eliminate_step(mat: SignMatrix, *, ops: Counter | None = None) -> SignMatrix:
    """Remove one ``-1``: the last one in the first row that has any."""
    m = [list(r) for r in mat.entries]
    target = next(((a, b) for a, row in enumerate(m) for b in range(len(row) - 1, -1, -1) if row[b] == -1), None)
    if target is None:
        raise NoNegativeEntry("sign matrix has no -1 entry")
    a, b = target
    neighbours = []
    for i in range(a + 1):
        for j in range(b + 1):
            if m[i][j] != 1:
                continue
            if ops is not None:
                ops["comparisons"] += 1
            if all(
                m[s][t] != 1 or (s, t) == (i, j)
                for s in range(i, a + 1)
                for t in range(j, b + 1)
            ):
                neighbours.append((i, j))
    neighbours.sort(reverse=True)  # rows decreasing
    m[a][b] = 0
    for i, j in neighbours:
        m[i][j] = 0
    for (_, j_prev), (i_next, _) in zip(neighbours, neighbours[1:]):
        m[i_next][j_prev] = 1
    if ops is not None:
        ops["cell_moves"] += len(neighbours)
    return SignMatrix(tuple(tuple(r) for r in m))


def eliminate_all(mat: SignMatrix, *, ops: Counter | None = None) -> SignMatrix:
    while mat.count(-1):
        mat = aval_eliminate_step(mat, ops=ops)
    return mat


def _left_key_columns(columns: Sequence[Sequence[int]], m: int, ops: Counter | None) -> list[list[int]]:
    mat = eliminate_all(sign_matrix_of_columns(columns, m), ops=ops)
    return columns_of_matrix(mat)


def aval_left_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    m = max(s.entries(), default=0)
    cols = _left_key_columns(s.columns(), m, ops)
    key = KeyTableau.from_columns(cols, s.n)
    if key.shape != s.shape:
        raise ShapeMismatch(f"left key shape {key.shape.parts} != {s.shape.parts}")
    return key


def complement_columns(columns: Sequence[Sequence[int]], m: int) -> list[list[int]]:
    """Column ``j`` of the complement is ``{1..m}`` minus column ``c-j+1``."""
    return [[x for x in range(1, m + 1) if x not in set(col)] for col in reversed(columns)]


def aval_right_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    m = max(s.entries(), default=0)
    comp = complement_columns(s.columns(), m)
    left = _left_key_columns(comp, m, ops)
    cols = complement_columns(left, m)
    key = KeyTableau.from_columns(cols, s.n)
    if key.shape != s.shape:
        raise ShapeMismatch(f"right key shape {key.shape.parts} != {s.shape.parts}")
    return key
