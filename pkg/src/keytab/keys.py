"""Left and right keys of a semistandard tableau.

Left key
    Repeatedly draw a crossing-out line through the tableau: start at the
    bottom entry of the last column and, moving left, pick in each column the
    largest entry not exceeding the one picked to its right.  The entry picked
    in the first column is the next letter of a permutation ``tau``; the line's
    cells are removed and the columns closed up.  After the first column is
    exhausted the unused letters follow in decreasing order.  The left key is
    the key tableau of ``tau``.

Right key
    Rows are processed top to bottom.  At stage ``i`` the last entry of row
    ``i`` is exposed; while the row above holds an entry ``>=`` the exposed one,
    the leftmost such entry and everything to its right drop one row and the
    entry just left of it becomes the exposed one.  The value exposed at the
    end of stage ``i`` is ``phi_i``; unused letters follow in increasing order.
    Holes left behind are filled with a copy of their left neighbour and
    tagged (coloured) with the stage that created them, which lets the whole
    minimal chain be read off the final configuration.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import EmptyTableau, EntryOutOfRange, StageOutOfRange
from .lifts import max_lift, min_lift
from .order import bruhat_leq
from .tableau import KeyTableau, Permutation, Tableau, coset_to_key_tableau


def _bump(ops: Counter | None, key: str, k: int = 1) -> None:
    if ops is not None:
        ops[key] += k


def _checked(s: Tableau, n: int | None) -> Tableau:
    if n is None or n == s.n:
        return s
    if any(x > n for x in s.entries()):
        raise EntryOutOfRange(f"tableau has entries larger than n={n}")
    return s.with_n(n)


# ---------------------------------------------------------------- crossing out


@dataclass(frozen=True)
class Cell:
    value: int
    row: int
    col: int


@dataclass(frozen=True)
class CrossOutTrace:
    """One line per pass; cells are given in the coordinates of the input."""

    lines: tuple[tuple[Cell, ...], ...]

    def first_column_values(self) -> tuple[int, ...]:
        return tuple(line[0].value for line in self.lines)

    def to_dict(self) -> dict:
        return {
            "lines": [
                [{"value": c.value, "row": c.row, "col": c.col} for c in line]
                for line in self.lines
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CrossOutTrace":
        return cls(tuple(tuple(Cell(c["value"], c["row"], c["col"]) for c in line) for line in data["lines"]))


def _draw_line(columns: list[list[Cell]], ops: Counter | None = None) -> list[int]:
    """Row index picked in each column, right to left rule."""
    picks = [0] * len(columns)
    bound = None
    for j in range(len(columns) - 1, -1, -1):
        col = columns[j]
        if bound is None:
            k = len(col) - 1
        else:
            k = len(col) - 1
            while col[k].value > bound:
                k -= 1
                _bump(ops, "comparisons")
            _bump(ops, "comparisons")
        picks[j] = k
        bound = col[k].value
    return picks


def crossout_step(s: Tableau) -> tuple[int, Tableau, tuple[Cell, ...]]:
    """One crossing-out pass.

    Returns the first-column value of the line, the tableau left after
    removing the line and closing up the columns, and the line itself (cells
    in the coordinates of ``s``, first column first).
    """
    if s.size == 0:
        raise EmptyTableau("cannot cross out a line in the empty tableau")
    columns = [[Cell(x, i, j) for i, x in enumerate(col)] for j, col in enumerate(s.columns())]
    picks = _draw_line(columns)
    line = tuple(columns[j][k] for j, k in enumerate(picks))
    rest = [[c.value for i, c in enumerate(col) if i != picks[j]] for j, col in enumerate(columns)]
    rest = [col for col in rest if col]
    return line[0].value, Tableau.from_columns(rest, s.n), line


def left_key_permutation(
    s: Tableau, n: int | None = None, *, ops: Counter | None = None
) -> tuple[Permutation, CrossOutTrace]:
    """The Bruhat-maximal representative ``tau`` of the left key coset."""
    s = _checked(s, n)
    if s.size == 0:
        return Permutation.identity(s.n), CrossOutTrace(())
    columns = [[Cell(x, i, j) for i, x in enumerate(col)] for j, col in enumerate(s.columns())]
    lines = []
    head = []
    while columns:
        picks = _draw_line(columns, ops)
        lines.append(tuple(columns[j][k] for j, k in enumerate(picks)))
        head.append(columns[0][picks[0]].value)
        for j, k in enumerate(picks):
            del columns[j][k]
        _bump(ops, "cell_moves", len(picks))
        while columns and not columns[-1]:
            columns.pop()
    used = set(head)
    tail = [x for x in range(s.n, 0, -1) if x not in used]
    return Permutation(head + tail), CrossOutTrace(tuple(lines))


def left_key(s: Tableau, n: int | None = None) -> KeyTableau:
    s = _checked(s, n)
    tau, _ = left_key_permutation(s)
    return coset_to_key_tableau(tau, s.shape)


# ---------------------------------------------------------------- push down


@dataclass(frozen=True)
class Entry:
    """A configuration cell.  ``filled`` marks copies made to plug holes."""

    value: int
    color: int
    filled: bool = False


@dataclass(frozen=True)
class Configuration:
    """Rows of entries; ``exposed`` is the (row, col) of the current exposed entry.

    ``stage`` is the index of the last completed stage (1-based).
    """

    rows: tuple[tuple[Entry, ...], ...]
    exposed: tuple[int, int]
    stage: int
    n: int
    exposed_history: tuple[tuple[int, int], ...] = field(default=())

    @property
    def exposed_value(self) -> int:
        i, j = self.exposed
        return self.rows[i][j].value

    def values(self, sparse: bool = False) -> list[list[int | None]]:
        """Plain values; with ``sparse`` the filled copies show as ``None``."""
        return [[None if sparse and e.filled else e.value for e in r] for r in self.rows]

    def colors(self) -> list[list[int]]:
        return [[e.color for e in r] for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "n": self.n,
            "history": [list(h) for h in self.exposed_history],
            "exposed": {"row": self.exposed[0], "col": self.exposed[1], "value": self.exposed_value},
            "rows": [
                [{"value": e.value, "color": e.color, "filled": e.filled} for e in r]
                for r in self.rows
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Configuration":
        rows = tuple(tuple(Entry(e["value"], e["color"], e["filled"]) for e in r) for r in data["rows"])
        exposed = (data["exposed"]["row"], data["exposed"]["col"])
        history = tuple(tuple(h) for h in data["history"])
        return cls(rows, exposed, data["stage"], data["n"], history)


def initial_configuration(s: Tableau) -> Configuration:
    if s.size == 0:
        raise EmptyTableau("the empty tableau has no configurations")
    rows = tuple(tuple(Entry(x, i + 1) for x in r) for i, r in enumerate(s.rows))
    exposed = (0, len(rows[0]) - 1)
    return Configuration(rows, exposed, 1, s.n, (exposed,))


def pushdown_stage(
    conf: Configuration,
    i: int,
    *,
    full_scan_check: bool = False,
    ops: Counter | None = None,
) -> Configuration:
    """Run stage ``i`` (1-based row index, ``2 <= i <= p``) on stage ``i-1``."""
    if conf.stage != i - 1 or not 2 <= i <= len(conf.rows):
        raise StageOutOfRange(f"cannot run stage {i} on a stage-{conf.stage} configuration")
    rows = [list(r) for r in conf.rows]
    width = len(rows[0])
    r = i - 1  # 0-based row holding the temporarily exposed entry
    col = len(rows[r]) - 1
    value = rows[r][col].value
    while r > 0:
        above = rows[r - 1]
        hit = None
        for k in range(col + 1, width):
            _bump(ops, "comparisons")
            if above[k].value >= value:
                hit = k
                break
        if full_scan_check:
            full = next((k for k in range(width) if above[k].value >= value), None)
            assert full == hit, f"scan shortcut disagrees: {full} vs {hit}"
        if hit is None:
            break
        moved = above[hit:]
        _bump(ops, "cell_moves", len(moved))
        lower = rows[r]
        while len(lower) < hit:
            lower.append(Entry(lower[-1].value, i, True))
        rows[r] = lower[:hit] + moved
        rows[r - 1] = above[:hit] + [Entry(above[hit - 1].value, i, True)] * (width - hit)
        r, col = r - 1, hit - 1
        value = rows[r][col].value
    # row i becomes full width even when nothing was pushed into it
    bottom = rows[i - 1]
    while len(bottom) < width:
        bottom.append(Entry(bottom[-1].value, i, True))
    exposed = (r, col)
    return Configuration(
        tuple(tuple(x) for x in rows), exposed, i, conf.n, conf.exposed_history + (exposed,)
    )


def configurations(s: Tableau, *, full_scan_check: bool = False, ops: Counter | None = None) -> list[Configuration]:
    """``[S_1, ..., S_p]`` for a nonempty tableau."""
    confs = [initial_configuration(s)]
    for i in range(2, s.num_rows + 1):
        confs.append(pushdown_stage(confs[-1], i, full_scan_check=full_scan_check, ops=ops))
    return confs


def right_key_permutation(
    s: Tableau, n: int | None = None, *, full_scan_check: bool = False, ops: Counter | None = None
) -> tuple[Permutation, Configuration | None]:
    """The Bruhat-minimal representative ``phi`` of the right key coset.

    Also returns the final configuration (``None`` for the empty tableau).
    """
    s = _checked(s, n)
    if s.size == 0:
        return Permutation.identity(s.n), None
    confs = configurations(s, full_scan_check=full_scan_check, ops=ops)
    head = [c.exposed_value for c in confs]
    used = set(head)
    tail = [x for x in range(1, s.n + 1) if x not in used]
    return Permutation(head + tail), confs[-1]


def right_key(s: Tableau, n: int | None = None) -> KeyTableau:
    s = _checked(s, n)
    phi, _ = right_key_permutation(s)
    return coset_to_key_tableau(phi, s.shape)


def minimal_chain(s: Tableau, n: int | None = None) -> list[Permutation]:
    """The minimal chain, one permutation per column of ``s``.

    Column ``j`` of the final configuration, ordered by colour, gives the first
    ``p`` letters of the ``j``-th permutation.
    """
    s = _checked(s, n)
    if s.size == 0:
        return []
    final = configurations(s)[-1]
    chain = []
    for j in range(len(final.rows[0])):
        column = sorted((r[j] for r in final.rows), key=lambda e: e.color)
        colors = [e.color for e in column]
        assert len(set(colors)) == len(colors), f"repeated colour in column {j}: {colors}"
        head = [e.value for e in column]
        used = set(head)
        chain.append(Permutation(head + [x for x in range(1, s.n + 1) if x not in used]))
    return chain


# ---------------------------------------------------------------- cross-check via lifts


@dataclass(frozen=True)
class LiftReport:
    tau_direct: Permutation
    tau_lifts: Permutation
    phi_direct: Permutation
    phi_lifts: Permutation
    chain_direct: tuple[Permutation, ...]
    chain_lifts: tuple[Permutation, ...]

    @property
    def ok(self) -> bool:
        return (
            self.tau_direct == self.tau_lifts
            and self.phi_direct == self.phi_lifts
            and self.chain_direct == self.chain_lifts
        )

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "tau": {"direct": str(self.tau_direct), "lifts": str(self.tau_lifts)},
            "phi": {"direct": str(self.phi_direct), "lifts": str(self.phi_lifts)},
            "chain": {
                "direct": [str(p) for p in self.chain_direct],
                "lifts": [str(p) for p in self.chain_lifts],
            },
        }


def lift_chains(s: Tableau) -> tuple[list[Permutation], list[Permutation]]:
    """Iterated maximal lifts (right to left from the longest element) and
    iterated minimal lifts (left to right from the identity)."""
    cols = s.columns()
    maxes: list[Permutation] = []
    w = Permutation.longest(s.n)
    for col in reversed(cols):
        w = max_lift(len(col), col, w)
        maxes.append(w)
    maxes.reverse()
    mins: list[Permutation] = []
    w = Permutation.identity(s.n)
    for col in cols:
        w = min_lift(len(col), col, w)
        mins.append(w)
    return maxes, mins


def verify_via_lifts(s: Tableau, n: int | None = None) -> LiftReport:
    s = _checked(s, n)
    tau, _ = left_key_permutation(s)
    phi, _ = right_key_permutation(s)
    maxes, mins = lift_chains(s)
    return LiftReport(
        tau_direct=tau,
        tau_lifts=maxes[0] if maxes else Permutation.identity(s.n),
        phi_direct=phi,
        phi_lifts=mins[-1] if mins else Permutation.identity(s.n),
        chain_direct=tuple(minimal_chain(s)),
        chain_lifts=tuple(mins),
    )


def is_chain(perms: Sequence[Sequence[int]]) -> bool:
    return all(bruhat_leq(a, b) for a, b in zip(perms, perms[1:]))
