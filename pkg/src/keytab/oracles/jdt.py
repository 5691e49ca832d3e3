"""Keys through jeu de taquin.

Column ``j`` of the left (right) key is the first (last) column of the
unique skew tableau, jeu-de-taquin equivalent to ``S``, whose column lengths
are those of ``S`` with the ``j``-th one moved to the front (back).

The skew tableau is reached from ``S`` by reverse slides whose holes fill the
target inner shape in a fixed order.  Which outer cell to slide into is
searched depth first, remembering dead ends.  Reversing the forward
rectification of the target (sliding into the inner cells in the opposite
order) is one such path, so the search succeeds whenever the target exists.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..errors import IncompatibleSkewShape
from ..tableau import KeyTableau, SkewTableau, Tableau, conjugate

Grid = dict[tuple[int, int], int]


def _reverse_slide(grid: Grid, cell: tuple[int, int], ops: Counter | None) -> tuple[int, int]:
    """Slide the hole at ``cell`` up/left until it has no neighbour above or
    to the left; return where the hole ends up."""
    r, c = cell
    while True:
        up = grid.get((r - 1, c))
        left = grid.get((r, c - 1))
        if up is None and left is None:
            return r, c
        if ops is not None:
            ops["comparisons"] += 1
            ops["cell_moves"] += 1
        if left is None or (up is not None and up >= left):
            grid[r, c] = grid.pop((r - 1, c))
            r -= 1
        else:
            grid[r, c] = grid.pop((r, c - 1))
            c -= 1


def _fill_order(inner: Sequence[int], by_columns: bool) -> list[tuple[int, int]]:
    """Cells of the inner shape in the order the holes must reach them."""
    if by_columns:
        width = inner[0] if inner else 0
        return [(i, j) for j in range(width) for i in range(len(inner)) if j < inner[i]]
    return [(i, j) for i, m in enumerate(inner) for j in range(m)]


def _search(
    grid: Grid,
    outer: list[int],
    target_outer: Sequence[int],
    order: Sequence[tuple[int, int]],
    k: int,
    failed: set[frozenset],
    ops: Counter | None,
) -> Grid | None:
    if k == len(order):
        return grid
    key = frozenset(grid.items())
    if key in failed:
        return None
    for r in range(len(target_outer)):
        c = outer[r]
        if c >= target_outer[r] or (r > 0 and outer[r - 1] <= c):
            continue
        g = dict(grid)
        if _reverse_slide(g, (r, c), ops) != order[k]:
            continue
        new_outer = outer.copy()
        new_outer[r] += 1
        found = _search(g, new_outer, target_outer, order, k + 1, failed, ops)
        if found is not None:
            return found
    failed.add(key)
    return None


def jdt_rectify_to_skew(
    s: Tableau,
    outer: Sequence[int],
    inner: Sequence[int],
    *,
    check_confluence: bool = False,
    ops: Counter | None = None,
) -> SkewTableau:
    """Skew tableau of shape ``outer / inner`` obtained from ``s`` by reverse slides.

    ``outer`` and ``inner`` are row lengths.  The holes fill the inner shape
    row by row; with ``check_confluence`` the search is repeated filling it
    column by column and both results must agree.
    """
    outer = tuple(x for x in outer if x)
    inner = tuple(x for x in inner if x)
    mu = tuple(len(r) for r in s.rows)
    height = max(len(outer), len(mu))
    t_outer = list(outer) + [0] * (height - len(outer))
    t_inner = list(inner) + [0] * (height - len(inner))
    if any(a > b for a, b in zip(t_inner, t_outer)) or any(
        a > b for a, b in zip(mu + (0,) * (height - len(mu)), t_outer)
    ):
        raise IncompatibleSkewShape(f"{mu} does not fit in {outer}/{inner}")
    if sum(outer) - sum(inner) != s.size:
        raise IncompatibleSkewShape(f"{outer}/{inner} has the wrong number of cells")
    grid = {(i, j): x for i, r in enumerate(s.rows) for j, x in enumerate(r)}
    start_outer = list(mu) + [0] * (height - len(mu))
    results = []
    for by_columns in ((False, True) if check_confluence else (False,)):
        order = _fill_order(inner, by_columns)
        found = _search(dict(grid), start_outer, t_outer, order, 0, set(), ops)
        if found is None:
            raise IncompatibleSkewShape(f"no slide sequence reaches {outer}/{inner}")
        results.append(found)
    assert all(r == results[0] for r in results), "jeu de taquin result depends on the slide order"
    return SkewTableau(outer, inner, tuple(sorted(results[0].items())))


def left_recipe(col_lengths: Sequence[int], j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Target (outer, inner) row lengths for column ``j`` (0-based) of the left key.

    Columns are ``b_j, b_1, ..., b_{j-1}, b_{j+1}, ..., b_c`` and the missing
    shape is one column of height ``b_1 - b_j``.
    """
    b = list(col_lengths)
    h = b[0] - b[j]
    outer_cols = [b[0]] + b[:j] + b[j + 1:]
    return conjugate_cols(outer_cols), (1,) * h


def right_recipe(col_lengths: Sequence[int], j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Target (outer, inner) for column ``j`` (0-based) of the right key.

    Columns are ``b_1, ..., b_{j-1}, b_{j+1}, ..., b_c, b_j`` and the missing
    shape is a rectangle of height ``b_j - b_c`` and width ``c - 1``.
    """
    b = list(col_lengths)
    c = len(b)
    h = b[j] - b[-1]
    outer_cols = [h + x for x in b[:j] + b[j + 1:]] + [b[j]]
    return conjugate_cols(outer_cols), (c - 1,) * h


def conjugate_cols(col_lengths: Sequence[int]) -> tuple[int, ...]:
    """Row lengths of the diagram with the given (weakly decreasing) column lengths."""
    if any(a < b for a, b in zip(col_lengths, col_lengths[1:])):
        raise IncompatibleSkewShape(f"column lengths {list(col_lengths)} are not a partition")
    return conjugate(sorted(col_lengths, reverse=True)) if col_lengths else ()


def ls_left_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    b = [len(col) for col in s.columns()]
    columns = []
    for j in range(len(b)):
        outer, inner = left_recipe(b, j)
        skew = jdt_rectify_to_skew(s, outer, inner, ops=ops)
        columns.append(skew.column(0))
    return KeyTableau.from_columns(columns, s.n)


def ls_right_key(s: Tableau, *, ops: Counter | None = None) -> KeyTableau:
    b = [len(col) for col in s.columns()]
    columns = []
    for j in range(len(b)):
        outer, inner = right_recipe(b, j)
        skew = jdt_rectify_to_skew(s, outer, inner, ops=ops)
        columns.append(skew.column(len(b) - 1))
    return KeyTableau.from_columns(columns, s.n)
