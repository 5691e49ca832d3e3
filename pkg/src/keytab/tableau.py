"""Shapes, semistandard tableaux, permutations and key tableaux.

Tableaux use the English convention: row 0 is the top row, rows weakly
increase to the right and columns strictly increase downward.  Entries lie in
``1..n`` where ``n`` is carried explicitly on every tableau.
"""

from __future__ import annotations

import json
import random
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EntryOutOfRange,
    KeyTabError,
    NonSSYT,
    NotAPermutation,
    NotKeyTableau,
    RaggedShape,
    ShapeTooTall,
)

Row = tuple[int, ...]


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation.

    Behaves exactly like the tuple ``(w_1, ..., w_n)``; construction checks
    that the entries are a rearrangement of ``1..n``.
    """

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise NotAPermutation(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse ``"834125679"`` or, for n >= 10, ``"10 2 1 ..."``/``"10,2,1"``."""
        text = text.strip()
        if "," in text or " " in text:
            return cls(int(tok) for tok in text.replace(",", " ").split())
        return cls(int(ch) for ch in text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def prefix_set(self, i: int) -> tuple[int, ...]:
        """Sorted tuple of the first ``i`` letters."""
        return tuple(sorted(self[:i]))

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(str(v) for v in self)
        return " ".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"


@dataclass(frozen=True)
class Shape:
    """A partition with at most ``n`` nonzero parts."""

    parts: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        if any(x < 0 for x in parts):
            raise RaggedShape(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise RaggedShape(f"parts {parts} are not weakly decreasing")
        if len(parts) > self.n:
            raise ShapeTooTall(f"shape {parts} has more than n={self.n} parts")

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def num_columns(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def column_lengths(self) -> tuple[int, ...]:
        return conjugate(self.parts)

    def padded(self) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n`` (the composition view)."""
        return self.parts + (0,) * (self.n - len(self.parts))


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def _as_parts(shape: Shape | Sequence[int]) -> tuple[int, ...]:
    if isinstance(shape, Shape):
        return shape.parts
    return tuple(x for x in shape if x)


@dataclass(frozen=True, eq=False)
class Tableau:
    """A semistandard Young tableau with entries in ``1..n``."""

    rows: tuple[Row, ...]
    n: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise KeyTabError("ambient n must be positive")
        lengths = [len(r) for r in rows]
        if any(x == 0 for x in lengths):
            raise RaggedShape("empty row in the middle of a tableau")
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise RaggedShape(f"row lengths {lengths} are not weakly decreasing")
        if len(rows) > self.n:
            raise ShapeTooTall(f"{len(rows)} rows exceed n={self.n}")
        for r in rows:
            for x in r:
                if not 1 <= x <= self.n:
                    raise EntryOutOfRange(f"entry {x} not in 1..{self.n}")
            if any(a > b for a, b in zip(r, r[1:])):
                raise NonSSYT(f"row {r} is not weakly increasing")
        for upper, lower in zip(rows, rows[1:]):
            for a, b in zip(upper, lower):
                if a >= b:
                    raise NonSSYT(f"column not strictly increasing ({a} above {b})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.rows, self.n))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]}, n={self.n})"

    def __str__(self) -> str:
        return format_tableau(self)

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows), self.n)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> tuple[Row, ...]:
        """Columns left to right, each read top to bottom."""
        return tuple(
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(self.num_columns)
        )

    def entries(self) -> Iterator[int]:
        for r in self.rows:
            yield from r

    def with_n(self, n: int) -> "Tableau":
        return type(self)(self.rows, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], n: int) -> "Tableau":
        height = len(columns[0]) if columns else 0
        rows = [
            tuple(col[i] for col in columns if len(col) > i) for i in range(height)
        ]
        return cls(tuple(rows), n)


class KeyTableau(Tableau):
    """A tableau whose every column is contained in the column to its left."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_key_tableau(self):
            raise NotKeyTableau(f"{self.rows} is not a key tableau")


@dataclass(frozen=True)
class SkewTableau:
    """A filling of ``outer / inner``; ``cells`` maps (row, col) to entry."""

    outer: tuple[int, ...]
    inner: tuple[int, ...]
    cells: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self) -> None:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        if len(inner) > len(self.outer) or any(a > b for a, b in zip(inner, self.outer)):
            raise RaggedShape(f"inner {self.inner} not contained in outer {self.outer}")
        grid = dict(self.cells)
        expected = {(i, j) for i, m in enumerate(self.outer) for j in range(inner[i], m)}
        if set(grid) != expected:
            raise RaggedShape("cells do not match the skew shape")
        for (i, j), x in grid.items():
            if (i, j + 1) in grid and grid[i, j + 1] < x:
                raise NonSSYT("skew row not weakly increasing")
            if (i + 1, j) in grid and grid[i + 1, j] <= x:
                raise NonSSYT("skew column not strictly increasing")

    def grid(self) -> dict[tuple[int, int], int]:
        return dict(self.cells)

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of column ``j`` top to bottom."""
        return tuple(x for (r, c), x in sorted(self.cells) if c == j)

    @property
    def num_columns(self) -> int:
        return self.outer[0] if self.outer else 0


# ---------------------------------------------------------------- parsing


def parse_tableau(text: str, n: int | None = None) -> Tableau:
    """Parse one row per line of space separated positive integers.

    ``n`` defaults to the largest entry (1 for the empty tableau).
    """
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise KeyTabError(f"cannot parse row {line!r}") from exc
    if any(x < 1 for r in rows for x in r):
        raise EntryOutOfRange("entries must be positive")
    if n is None:
        n = max((x for r in rows for x in r), default=1)
    return Tableau(tuple(rows), n)


def format_tableau(t: Tableau) -> str:
    return "\n".join(" ".join(str(x) for x in r) for r in t.rows)


def tableau_to_dict(t: Tableau) -> dict:
    return {"n": t.n, "rows": [list(r) for r in t.rows]}


def tableau_from_dict(data: dict) -> Tableau:
    try:
        rows = tuple(tuple(r) for r in data["rows"])
        n = int(data["n"])
    except (KeyError, TypeError) as exc:
        raise KeyTabError(f"malformed tableau JSON: {exc}") from exc
    return Tableau(rows, n)


def tableau_to_json(t: Tableau) -> str:
    return json.dumps(tableau_to_dict(t))


def tableau_from_json(text: str) -> Tableau:
    return tableau_from_dict(json.loads(text))


# ---------------------------------------------------------------- keys and cosets


def is_key_tableau(t: Tableau) -> bool:
    cols = t.columns()
    return all(set(b) <= set(a) for a, b in zip(cols, cols[1:]))


def coset_to_key_tableau(sigma: Sequence[int], shape: Shape | Sequence[int]) -> KeyTableau:
    """The key tableau whose column of height j holds ``sigma_1..sigma_j`` sorted."""
    sigma = Permutation(sigma)
    parts = _as_parts(shape)
    if len(parts) > len(sigma):
        raise ShapeTooTall(f"shape {parts} has more than n={len(sigma)} parts")
    columns = [sorted(sigma[:h]) for h in conjugate(parts)]
    return KeyTableau.from_columns(columns, len(sigma))


def key_tableau_to_min_coset_rep(k: Tableau) -> Permutation:
    """Shortest permutation mapping to ``k``.

    The letters added at each new column height are written in increasing
    order, and the letters missing from the first column follow, increasing.
    """
    if not is_key_tableau(k):
        raise NotKeyTableau(f"{k.rows} is not a key tableau")
    word: list[int] = []
    seen: set[int] = set()
    for col in reversed(k.columns()):
        fresh = sorted(set(col) - seen)
        word.extend(fresh)
        seen.update(fresh)
    word.extend(x for x in range(1, k.n + 1) if x not in seen)
    return Permutation(word)


# ---------------------------------------------------------------- words


def reverse_reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows top to bottom, each read right to left."""
    return tuple(x for r in t.rows for x in reversed(r))


def column_word(t: Tableau) -> tuple[int, ...]:
    """Columns left to right, each read bottom to top."""
    return tuple(x for col in t.columns() for x in reversed(col))


def weight_monomial(t: Tableau) -> tuple[int, ...]:
    """Exponent vector ``(e_1, ..., e_n)``: multiplicity of each entry."""
    e = [0] * t.n
    for x in t.entries():
        e[x - 1] += 1
    return tuple(e)


def act_on_composition(w: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``(w f)(i) = f(w^{-1} i)``."""
    out = [0] * len(f)
    for i, wi in enumerate(w):
        out[wi - 1] = f[i]
    return tuple(out)


# ---------------------------------------------------------------- enumeration


def enumerate_ssyt(shape: Shape | Sequence[int], n: int) -> Iterator[Tableau]:
    """All SSYT of ``shape`` with entries at most ``n``.

    Tableaux are produced in lexicographic order of their row reading word
    (top row left to right, then the next row, ...).
    """
    parts = _as_parts(shape)
    if len(parts) > n:
        return
    cells = [(i, j) for i, m in enumerate(parts) for j in range(m)]
    grid = [[0] * m for m in parts]

    def fill(k: int) -> Iterator[Tableau]:
        if k == len(cells):
            yield Tableau(tuple(tuple(r) for r in grid), n)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing cells below
        below = sum(1 for r in range(i + 1, len(parts)) if parts[r] > j)
        for x in range(lo, n - below + 1):
            grid[i][j] = x
            yield from fill(k + 1)
        grid[i][j] = 0

    yield from fill(0)


def partitions(total: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def all_ssyt(max_cells: int, n: int, min_cells: int = 1) -> Iterator[Tableau]:
    """Every SSYT with between ``min_cells`` and ``max_cells`` cells, entries <= n."""
    for size in range(min_cells, max_cells + 1):
        for lam in partitions(size, max_len=n):
            yield from enumerate_ssyt(lam, n)


def row_insert(rows: list[list[int]], x: int) -> None:
    """RSK row insertion of ``x`` into ``rows`` (modified in place)."""
    for row in rows:
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return
        row[k], x = x, row[k]
    rows.append([x])


def random_ssyt(rng: random.Random, size: int, n: int) -> Tableau:
    """Insertion tableau of a uniformly random word of length ``size`` over 1..n."""
    rows: list[list[int]] = []
    for _ in range(size):
        row_insert(rows, rng.randint(1, n))
    return Tableau(tuple(tuple(r) for r in rows), n)
