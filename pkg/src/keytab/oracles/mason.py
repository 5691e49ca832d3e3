"""Right keys through semiskyline augmented fillings.

The column word of the tableau is inserted letter by letter (last letter
first) into a filling that sits on a basement row ``1..m``.  The height
``gamma_j`` of the stack above basement cell ``j`` says that ``j`` occupies
columns ``1..gamma_j`` of the right key.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import ShapeMismatch
from ..tableau import KeyTableau, Tableau, column_word


@dataclass(frozen=True)
class SSAF:
    """``stacks[j-1]`` holds the boxes above basement cell ``j``, bottom up."""

    stacks: tuple[tuple[int, ...], ...]

    @classmethod
    def empty(cls, m: int) -> "SSAF":
        return cls(((),) * m)

    @property
    def width(self) -> int:
        return len(self.stacks)

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.stacks)

    def rows(self) -> list[list[int | None]]:
        """Top row first, basement last; ``None`` where there is no box."""
        height = max(self.gamma, default=0)
        out = [
            [s[h - 1] if len(s) >= h else None for s in self.stacks]
            for h in range(height, 0, -1)
        ]
        out.append(list(range(1, self.width + 1)))
        return out


def mason_insert(f: SSAF, k: int, *, ops: Counter | None = None) -> SSAF:
    """Insert ``k`` (basement is widened to ``k`` if needed)."""
    stacks = [list(s) for s in f.stacks]
    while len(stacks) < k:
        stacks.append([])

    def entry(col: int, h: int) -> int:
        # h = 0 is the basement
        return col + 1 if h == 0 else stacks[col][h - 1]

    # boxes in reading order: top row first, left to right; fixed for the pass
    height = max((len(s) for s in stacks), default=0)
    boxes = [(col, h) for h in range(height, -1, -1) for col in range(len(stacks)) if len(stacks[col]) >= h]
    x = k
    for col, h in boxes:
        if ops is not None:
            ops["comparisons"] += 1
        above = stacks[col][h] if len(stacks[col]) > h else 0
        if entry(col, h) < x or above >= x:
            continue
        if ops is not None:
            ops["cell_moves"] += 1
        if len(stacks[col]) > h:
            stacks[col][h] = x
            x = above
        else:
            stacks[col].append(x)
            x = 0
        if x == 0:
            break
    else:
        raise AssertionError(f"insertion of {k} did not terminate")
    return SSAF(tuple(tuple(s) for s in stacks))


def mason_ssaf(s: Tableau, *, ops: Counter | None = None) -> SSAF:
    f = SSAF.empty(max(s.entries(), default=0))
    for k in reversed(column_word(s)):
        f = mason_insert(f, k, ops=ops)
    return f


def mason_right_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    gamma = mason_ssaf(s, ops=ops).gamma
    c = s.num_columns
    columns = [[j for j, g in enumerate(gamma, start=1) if g >= i] for i in range(1, c + 1)]
    if [len(col) for col in columns] != list(s.shape.column_lengths):
        raise ShapeMismatch(f"gamma {gamma} does not match shape {s.shape.parts}")
    return KeyTableau.from_columns(columns, s.n)
