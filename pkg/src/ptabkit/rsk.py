"""Ptableau RSK insertion, its inverse, and classic column-insertion RSK.

:func:`insert_resolve` works on the cell multiset directly: append the new
cell, then keep decrementing the right-most violation entry of the
right-justified layout until none is left.  :func:`classic_rsk` is the
textbook column insertion on biwords and serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from .crystal import is_highest_weight
from .duality import bw, perf, satisfies_word_condition, violations, content_shape
from .errors import (
    InternalInconsistency,
    MalformedInput,
    NotHighestWeight,
    ShapeMismatch,
    WordConditionPrecondition,
)
from .grid import Ptableau, extend, weight
from .words import Biword, standardize


@dataclass(frozen=True)
class Insert:
    content: int
    row: int


@dataclass(frozen=True)
class Decrement:
    content: int  # value before the decrement
    row: int
    col: int  # column in the right-justified layout at that moment


@dataclass(frozen=True)
class Terminal:
    eta: int


Step = Union[Insert, Decrement, Terminal]


@dataclass
class ResolutionTrace:
    steps: List[Step] = field(default_factory=list)

    @property
    def eta(self) -> int:
        return self.steps[-1].eta

    @property
    def decrements(self) -> List[Decrement]:
        return [s for s in self.steps if isinstance(s, Decrement)]

    def as_json(self):
        out = []
        for s in self.steps:
            if isinstance(s, Insert):
                out.append({"step": "insert", "content": s.content, "row": s.row})
            elif isinstance(s, Decrement):
                out.append({"step": "decrement", "content": s.content, "row": s.row, "col": s.col})
            else:
                out.append({"step": "terminal", "eta": s.eta})
        return out


@dataclass(frozen=True)
class RskPair:
    pt: Ptableau
    tmax: Ptableau


@dataclass(frozen=True)
class SsytPair:
    p: Ptableau
    q: Ptableau


def _grown_row(before: Ptableau, after: Ptableau) -> int:
    a = content_shape(before)
    b = content_shape(after)
    grown = [c for c in range(1, len(b) + 1) if b[c - 1] != (a[c - 1] if c <= len(a) else 0)]
    if len(grown) != 1:
        raise InternalInconsistency(f"resolution changed content counts at {grown}")
    return grown[0]


def insert_resolve(pt: Ptableau, content: int, row: int, intermediates: Optional[list] = None):
    """Insert ``[content]_row`` into a distinguished-crystal ptableau.

    Returns ``(new_pt, trace)``.  When ``intermediates`` is a list, the
    working ptableau before each decrement and the final one are appended
    to it.
    """
    if not satisfies_word_condition(pt):
        raise WordConditionPrecondition("insertion target fails the word condition")
    n = max(pt.n_rows, row)
    cells = list(pt.cells) + [(content, row)]
    trace = ResolutionTrace([Insert(content, row)])
    eta = content
    budget = sum(c for c, _ in cells)
    while True:
        work = Ptableau(tuple(cells), n)
        if intermediates is not None:
            intermediates.append(work)
        found = violations(work)
        if not found:
            break
        budget -= 1
        if budget < 0:
            raise InternalInconsistency("resolution did not terminate")
        cell = found[0].cell
        cells.remove((cell.content, cell.row))
        cells.append((cell.content - 1, cell.row))
        trace.steps.append(Decrement(cell.content, cell.row, cell.col))
        eta = cell.content - 1
    trace.steps.append(Terminal(eta))
    if eta != _grown_row(pt, work):
        raise InternalInconsistency(f"terminal value {eta} does not name the grown row")
    return work, trace


def ptab_rsk(T: Ptableau, traces: Optional[list] = None, history: Optional[list] = None) -> RskPair:
    """Insert the columns of ``bw(T)`` one at a time, growing ``T_max`` alongside.

    ``traces`` collects each :class:`ResolutionTrace`; ``history`` collects
    ``(T^(k), PT^(k), Tmax^(k))`` for k = 1..len(T).
    """
    b = bw(T)
    pt = Ptableau.empty(T.n_rows)
    tmax = Ptableau.empty(T.n_rows)
    for k, (tau, omega) in enumerate(b.pairs, start=1):
        pt, trace = insert_resolve(pt, tau, omega)
        tmax = extend(tmax, tau, trace.eta)
        if traces is not None:
            traces.append(trace)
        if history is not None:
            history.append((perf(b.prefix(k), T.n_rows), pt, tmax))
    return RskPair(pt, tmax)


def _rows_to_ptab(rows, n_rows) -> Ptableau:
    cells = [(v, r) for r, row in enumerate(rows, start=1) for v in row]
    return Ptableau(tuple(cells), max(n_rows, len(rows), 1))


def _column_insert(P: List[List[int]], x: int) -> int:
    """Column-insert ``x`` into ``P`` (a list of columns); return the grown column."""
    c = 0
    while True:
        if c == len(P):
            P.append([x])
            return c
        col = P[c]
        pos = next((r for r, v in enumerate(col) if v >= x), None)
        if pos is None:
            col.append(x)
            return c
        col[pos], x = x, col[pos]
        c += 1


def _ptab_columns(P: Ptableau) -> List[List[int]]:
    cols: List[List[int]] = []
    for row in P.left:
        for j, v in enumerate(row):
            if v is not None:
                while len(cols) <= j:
                    cols.append([])
                cols[j].append(v)
    return cols


def column_insert(P: Ptableau, x: int) -> Ptableau:
    """Column insertion of ``x`` into an SSYT held as a highest-weight ptableau."""
    if not is_highest_weight(P):
        raise NotHighestWeight("column insertion needs a semistandard tableau")
    cols = _ptab_columns(P)
    _column_insert(cols, x)
    return _rows_to_ptab(_columns_to_rows(cols), P.n_rows)


def classic_rsk(b: Biword, n_rows: Optional[int] = None) -> SsytPair:
    """Column insertion of the bottom word, left to right, recording the top word."""
    P: List[List[int]] = []  # columns, top to bottom
    Q: List[List[int]] = []
    for tau, x in b.pairs:
        c = _column_insert(P, x)
        if c == len(Q):
            Q.append([])
        Q[c].append(tau)
    n_rows = n_rows or 1
    return SsytPair(_rows_to_ptab(_columns_to_rows(P), n_rows), _rows_to_ptab(_columns_to_rows(Q), n_rows))


def _columns_to_rows(cols):
    height = max((len(c) for c in cols), default=0)
    return [[c[r] for c in cols if len(c) > r] for r in range(height)]


def highest_weight_word(q: Ptableau) -> Tuple[int, ...]:
    """Rows holding the 1s of ``q``, then the 2s, and so on (standard order)."""
    return bw(q).bottom


def rsk_inverse(pt, tmax: Optional[Ptableau] = None) -> Ptableau:
    """Uninsert ``(PT, T_max)`` back to the ptableau it came from.

    Accepts either the two ptableaux or a single :class:`RskPair`.
    """
    if isinstance(pt, RskPair):
        pt, tmax = pt.pt, pt.tmax
    if not satisfies_word_condition(pt):
        raise MalformedInput("PT fails the word condition")
    if not is_highest_weight(tmax):
        raise NotHighestWeight("T_max is not highest weight")
    shape = tuple(p for p in weight(tmax) if p)
    if content_shape(pt) != shape or len(pt) != len(tmax):
        raise ShapeMismatch(f"PT content counts {content_shape(pt)} do not match T_max shape {shape}")
    n = max(pt.n_rows, tmax.n_rows)
    pt_cells = list(pt.cells)
    tmax_cells = list(tmax.cells)
    columns = []
    while tmax_cells:
        # largest content; among equals the top-most row is the right-most
        t, a = max(tmax_cells, key=lambda cell: (cell[0], -cell[1]))
        tmax_cells.remove((t, a))
        work = Ptableau(tuple(pt_cells), n)
        grid = [list(r) for r in work.right]
        width = work.n_cols
        start = None
        for col in range(width):
            rows = [r for r in range(work.n_rows) if grid[r][col] == a]
            if rows:
                start = (rows[0], col)
                break
        if start is None:
            raise MalformedInput(f"PT has no cell with content {a}")
        r, c = start
        pt_cells.remove((a, r + 1))
        grid[r][c] = None
        while c + 1 < width:
            col = c + 1
            s = max((rr for rr in range(r + 1) if grid[rr][col] is not None), default=None)
            if s is None:
                raise MalformedInput(f"column {col + 1} has no cell at or above row {r + 1}")
            b = grid[s][col]
            grid[s][col] = None
            grid[r][col] = b
            pt_cells.remove((b, s + 1))
            pt_cells.append((b, r + 1))
            r, c = s, col
        columns.append((t, r + 1))
    return Ptableau(tuple(standardize(columns).pairs), n)
