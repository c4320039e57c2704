"""Perforated tableaux: the value type, validation, layouts and text formats.

A ptableau is determined up to row-equivalence by the multiset of its
``(content, row)`` pairs, so that multiset (plus the row count) is what a
:class:`Ptableau` stores.  Concrete grids are derived on demand: the
left-justified layout places every cell as far left as the rules allow,
the right-justified one as far right, both at the same minimal width.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (
    ColumnStrictnessViolation,
    IndexOutOfRange,
    InvalidExtension,
    InvalidPtableau,
    ParseError,
    RowOrderViolation,
    StripOrderViolation,
)

Box = Optional[int]
Grid = Tuple[Tuple[Box, ...], ...]

LEFT = "left"
RIGHT = "right"


def _standard_key(cell):
    content, row = cell
    return (content, -row)


@dataclass(frozen=True)
class CellRef:
    content: int
    row: int
    col: int


@dataclass(frozen=True)
class Ptableau:
    """Row-equivalence class of a ptableau.

    ``cells`` holds ``(content, row)`` pairs sorted into biword standard
    order (content ascending, row descending); rows are 1-based.
    """

    cells: Tuple[Tuple[int, int], ...]
    n_rows: int

    def __post_init__(self):
        cells = tuple(sorted(((int(c), int(r)) for c, r in self.cells), key=_standard_key))
        for c, r in cells:
            if c < 1 or r < 1:
                raise InvalidPtableau(f"content and rows must be positive, got [{c}]_{r}")
            if r > self.n_rows:
                raise InvalidPtableau(f"cell [{c}]_{r} lies below row {self.n_rows}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_cells(cls, cells: Iterable[Tuple[int, int]], n_rows: Optional[int] = None) -> "Ptableau":
        cells = tuple(cells)
        if n_rows is None:
            n_rows = max((r for _, r in cells), default=1)
        return cls(cells, n_rows)

    @classmethod
    def empty(cls, n_rows: int = 1) -> "Ptableau":
        return cls((), n_rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Box]]) -> "Ptableau":
        """Validate a raw grid (``None`` = blank) and return its class."""
        return validate(rows)

    def __len__(self):
        return len(self.cells)

    def __str__(self):
        return to_text(self)

    @cached_property
    def _left_cols(self):
        cols = []
        # best[r] = right-most column used so far by a cell in row r
        best = [0] * (self.n_rows + 2)
        for c, r in self.cells:
            col = 1 + max(best[r:], default=0)
            cols.append(col)
            best[r] = max(best[r], col)
        return tuple(cols)

    @property
    def n_cols(self) -> int:
        return max(self._left_cols, default=0)

    @cached_property
    def _right_cols(self):
        width = self.n_cols
        cols = [0] * len(self.cells)
        least = [width + 1] * (self.n_rows + 2)
        for idx in range(len(self.cells) - 1, -1, -1):
            c, r = self.cells[idx]
            col = min(least[1 : r + 1], default=width + 1) - 1
            cols[idx] = col
            least[r] = min(least[r], col)
        return tuple(cols)

    def _grid(self, cols) -> Grid:
        rows = [[None] * self.n_cols for _ in range(self.n_rows)]
        for (c, r), col in zip(self.cells, cols):
            rows[r - 1][col - 1] = c
        return tuple(tuple(row) for row in rows)

    @cached_property
    def left(self) -> Grid:
        return self._grid(self._left_cols)

    @cached_property
    def right(self) -> Grid:
        return self._grid(self._right_cols)

    def grid(self, side: str = LEFT) -> Grid:
        if side == LEFT:
            return self.left
        if side == RIGHT:
            return self.right
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def located(self, side: str = LEFT):
        """Cells as :class:`CellRef` in the given layout, in standard order."""
        cols = self._left_cols if side == LEFT else self._right_cols
        return [CellRef(c, r, col) for (c, r), col in zip(self.cells, cols)]

    @property
    def weight(self) -> Tuple[int, ...]:
        return weight(self)

    @property
    def max_content(self) -> int:
        return max((c for c, _ in self.cells), default=0)

    def with_rows(self, n_rows: int) -> "Ptableau":
        return Ptableau(self.cells, n_rows)


# -- validation ---------------------------------------------------------------


def _rectangular(rows) -> list:
    rows = [list(r) for r in rows]
    if rows and len({len(r) for r in rows}) != 1:
        raise InvalidPtableau("grid is not rectangular")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v is not None and (isinstance(v, bool) or not isinstance(v, int) or v < 1):
                raise InvalidPtableau(f"box value {v!r} is not a positive integer", (i + 1, j + 1))
    return rows


def _grid_cells(rows):
    return [(v, i + 1, j + 1) for i, row in enumerate(rows) for j, v in enumerate(row) if v is not None]


def check_grid(rows) -> None:
    """Raise the first rule violation found in a raw grid, else return."""
    rows = _rectangular(rows)
    for i, row in enumerate(rows):
        last = None
        for j, v in enumerate(row):
            if v is None:
                continue
            if last is not None and v < last:
                raise RowOrderViolation(f"{v} follows {last} in its row", (i + 1, j + 1))
            last = v
    width = len(rows[0]) if rows else 0
    for j in range(width):
        last = None
        for i in range(len(rows)):
            v = rows[i][j]
            if v is None:
                continue
            if last is not None and v <= last:
                raise ColumnStrictnessViolation(f"{v} lies below {last} in its column", (i + 1, j + 1))
            last = v
    cells = _grid_cells(rows)
    for a in cells:
        for b in cells:
            if a is b:
                continue
            _check_pair(a, b)


def _check_pair(a, b):
    va, ra, ca = a
    vb, rb, cb = b
    if va < vb and rb <= ra and cb <= ca:
        raise StripOrderViolation(f"{vb} lies weakly north-west of the smaller {va}", (rb, cb))
    if va == vb and ca < cb and ra < rb:
        raise StripOrderViolation(f"the {va}-strip steps down to the right", (rb, cb))


def validate(rows: Sequence[Sequence[Box]]) -> Ptableau:
    """Check a raw grid and return its :class:`Ptableau`.

    Rows are kept as given (blank rows included); all-blank columns are
    dropped.
    """
    rows = _rectangular(rows)
    check_grid(rows)
    n_rows = len(rows)
    if n_rows == 0:
        raise InvalidPtableau("a ptableau needs at least one row")
    return Ptableau(tuple((v, r) for v, r, _ in _grid_cells(rows)), n_rows)


def drop_blank_columns(rows) -> Grid:
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    keep = [j for j in range(width) if any(row[j] is not None for row in rows)]
    return tuple(tuple(row[j] for j in keep) for row in rows)


# -- justification by adjacent swaps ------------------------------------------


def _cell_ok(rows, i, j) -> bool:
    v = rows[i][j]
    me = (v, i + 1, j + 1)
    for r, row in enumerate(rows):
        for c, w in enumerate(row):
            if w is None or (r == i and c == j):
                continue
            other = (w, r + 1, c + 1)
            if r == i and ((c < j and w > v) or (c > j and w < v)):
                return False
            if c == j and ((r < i and w >= v) or (r > i and w <= v)):
                return False
            try:
                _check_pair(me, other)
                _check_pair(other, me)
            except StripOrderViolation:
                return False
    return True


def justify(rows: Sequence[Sequence[Box]], side: str = LEFT, rng: Optional[random.Random] = None) -> Grid:
    """Left- or right-justify a raw grid by valid blank/cell swaps.

    Swaps are repeated until none applies.  ``rng`` shuffles the scan
    order; the fixed point does not depend on it.
    """
    check_grid(rows)
    grid = [list(r) for r in rows]
    width = len(grid[0]) if grid else 0
    step = -1 if side == LEFT else 1
    pairs = [(i, j) for i in range(len(grid)) for j in range(width) if 0 <= j + step < width]
    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(pairs)
        for i, j in pairs:
            k = j + step
            if grid[i][j] is None or grid[i][k] is not None:
                continue
            grid[i][k], grid[i][j] = grid[i][j], None
            if _cell_ok(grid, i, k):
                changed = True
            else:
                grid[i][j], grid[i][k] = grid[i][k], None
    return drop_blank_columns(grid)


# -- basic operations ---------------------------------------------------------


def restrict(T: Ptableau, i: int) -> Ptableau:
    """Two-row ptableau formed by rows ``i`` and ``i + 1`` of ``T``."""
    if not 1 <= i < T.n_rows:
        raise IndexOutOfRange(f"row index {i} outside 1..{T.n_rows - 1}")
    cells = [(c, r - i + 1) for c, r in T.cells if r in (i, i + 1)]
    return Ptableau(tuple(cells), 2)


def extend(T: Ptableau, content: int, row: int) -> Ptableau:
    """Append a cell with ``content`` at the right end of ``row``."""
    if content < 1 or row < 1:
        raise InvalidExtension("content and row must be positive")
    n_rows = max(T.n_rows, row)
    grid = [list(r) + [None] for r in T.with_rows(n_rows).left]
    if not grid[0]:
        grid = [[None] for _ in range(n_rows)]
    grid[row - 1][-1] = content
    try:
        check_grid(grid)
    except InvalidPtableau as exc:
        raise InvalidExtension(f"cannot append {content} to row {row}: {exc}") from exc
    return Ptableau(T.cells + ((content, row),), n_rows)


def weight(T: Ptableau) -> Tuple[int, ...]:
    parts = [0] * T.n_rows
    for _, r in T.cells:
        parts[r - 1] += 1
    return tuple(parts)


# -- text / JSON --------------------------------------------------------------


def format_grid(rows: Sequence[Sequence[Box]]) -> str:
    lines = []
    for row in rows:
        if len(row) == 0:
            lines.append("-")
        else:
            lines.append(" ".join("." if v is None else str(v) for v in row))
    return "\n".join(lines)


def to_text(T: Ptableau, side: str = LEFT) -> str:
    return format_grid(T.grid(side))


def parse_grid(text: str, first_line: int = 1):
    rows = []
    for offset, line in enumerate(text.strip("\n").splitlines()):
        line = line.strip()
        if line == "-":
            rows.append([])
            continue
        row = []
        col = 1
        for tok in line.split():
            if tok == ".":
                row.append(None)
            else:
                try:
                    v = int(tok)
                except ValueError:
                    raise ParseError(f"bad box {tok!r}", first_line + offset, col) from None
                if v < 1:
                    raise ParseError(f"content must be positive, got {v}", first_line + offset, col)
                row.append(v)
            col += len(tok) + 1
        rows.append(row)
    if not rows:
        raise ParseError("empty ptableau block", first_line)
    if all(len(r) == 0 for r in rows):
        return rows
    if len({len(r) for r in rows}) != 1:
        raise ParseError("rows have different lengths", first_line)
    return rows


def from_text(text: str) -> Ptableau:
    return validate_or_empty(parse_grid(text))


def validate_or_empty(rows) -> Ptableau:
    if all(len(r) == 0 for r in rows):
        return Ptableau.empty(len(rows))
    return validate(rows)


def split_blocks(text: str):
    """Split text into blank-line separated blocks as ``(first_line, block)``."""
    blocks = []
    current = []
    start = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            if start is None:
                start = lineno
            current.append(line)
        elif current:
            blocks.append((start, "\n".join(current)))
            current, start = [], None
    if current:
        blocks.append((start, "\n".join(current)))
    return blocks


def to_json(T: Ptableau, side: str = LEFT) -> dict:
    return {"rows": [list(r) for r in T.grid(side)] if T.n_cols else [[] for _ in range(T.n_rows)]}


def from_json(obj) -> Ptableau:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        rows = obj["rows"]
    except (KeyError, TypeError):
        raise ParseError('expected an object with a "rows" key') from None
    return validate_or_empty(rows)
