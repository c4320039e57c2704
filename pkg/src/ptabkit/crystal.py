"""Crystal operators acting directly on ptableaux."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import IndexOutOfRange, InvalidPtableau, InvalidResult, NullStep, ParseError
from .grid import LEFT, RIGHT, Ptableau, check_grid, restrict
from .words import LOWER, RAISE, Biword, Direction, crystal_biword, crystal_word

HIGHEST = "highest"
LOWEST = "lowest"


def _check(T: Ptableau, i: int):
    if not 1 <= i < T.n_rows:
        raise IndexOutOfRange(f"operator index {i} outside 1..{T.n_rows - 1}")


def eps_phi(T: Ptableau, i: int) -> Tuple[int, int]:
    _check(T, i)
    R = restrict(T, i)
    eps = sum(1 for v in R.left[0] if v is None)
    phi = sum(1 for v in R.right[1] if v is None)
    return eps, phi


def _moved_cell(R: Ptableau, direction: Direction) -> Optional[Tuple[int, int]]:
    """Content and row rank of the cell an operator moves in a restriction."""
    if direction is RAISE:
        top, bottom = R.left
        cols = range(len(top) - 1, -1, -1)
        source, target = bottom, top
    else:
        top, bottom = R.right
        cols = range(len(top))
        source, target = top, bottom
    for col in cols:
        if source[col] is not None and target[col] is None:
            rank = sum(1 for v in source[:col] if v is not None)
            return source[col], rank
    return None


def _swap_check(T: Ptableau, i: int, direction: Direction, content: int, rank: int):
    # The moved cell sits at the same rank of its row in *T (resp. T*),
    # and must have a blank directly above (resp. below) it there.
    side = LEFT if direction is RAISE else RIGHT
    rows = [list(r) for r in T.grid(side)]
    src = i if direction is RAISE else i - 1
    dst = i - 1 if direction is RAISE else i
    cols = [j for j, v in enumerate(rows[src]) if v is not None]
    col = cols[rank]
    if rows[src][col] != content or rows[dst][col] is not None:
        raise InvalidResult(f"{direction.value}_{i}: no blank next to the moved {content}")
    rows[dst][col], rows[src][col] = content, None
    try:
        check_grid(rows)
    except InvalidPtableau as exc:
        raise InvalidResult(f"{direction.value}_{i} produced an invalid grid: {exc}") from exc


def crystal_ptab(T: Ptableau, i: int, direction, verify: bool = False) -> Optional[Ptableau]:
    """Apply ``e_i`` or ``f_i`` to ``T``; None means NULL.

    With ``verify`` the move is also replayed on the stored grid and the
    result revalidated.
    """
    direction = Direction(direction)
    _check(T, i)
    moved = _moved_cell(restrict(T, i), direction)
    if moved is None:
        return None
    content, rank = moved
    if verify:
        _swap_check(T, i, direction, content, rank)
    src, dst = (i + 1, i) if direction is RAISE else (i, i + 1)
    cells = list(T.cells)
    cells.remove((content, src))
    cells.append((content, dst))
    return Ptableau(tuple(cells), T.n_rows)


def raise_op(T, i):
    return crystal_ptab(T, i, RAISE)


def lower_op(T, i):
    return crystal_ptab(T, i, LOWER)


def is_highest_weight(T: Ptableau) -> bool:
    """True iff the left-justified form is a semistandard Young tableau."""
    previous = None
    for row in T.left:
        length = sum(1 for v in row if v is not None)
        if any(v is None for v in row[:length]):
            return False
        if previous is not None and length > previous:
            return False
        previous = length
    return True


def is_lowest_weight(T: Ptableau) -> bool:
    return all(crystal_ptab(T, i, LOWER) is None for i in range(1, T.n_rows))


@dataclass(frozen=True)
class CrystalOpSequence:
    """Operator steps ``(index, direction, exponent)``, first step applied first."""

    steps: Tuple[Tuple[int, Direction, int], ...] = ()

    def __post_init__(self):
        steps = tuple((int(i), Direction(d), int(k)) for i, d, k in self.steps)
        for i, _, k in steps:
            if i < 1 or k < 1:
                raise ValueError(f"bad step index={i} exponent={k}")
        object.__setattr__(self, "steps", steps)

    @classmethod
    def from_moves(cls, moves: Sequence[Tuple[int, Direction]]) -> "CrystalOpSequence":
        steps = []
        for i, d in moves:
            d = Direction(d)
            if steps and steps[-1][0] == i and steps[-1][1] is d:
                steps[-1] = (i, d, steps[-1][2] + 1)
            else:
                steps.append((i, d, 1))
        return cls(tuple(steps))

    def expand(self) -> List[Tuple[int, Direction]]:
        return [(i, d) for i, d, k in self.steps for _ in range(k)]

    def __len__(self):
        return sum(k for _, _, k in self.steps)

    def __str__(self):
        return format_ops(self)


_TOKEN = re.compile(r"^([ef])(\d+)(?:\^(\d+))?$")


def parse_ops(text: str) -> CrystalOpSequence:
    steps = []
    col = 1
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m or int(m.group(2)) < 1 or (m.group(3) is not None and int(m.group(3)) < 1):
            raise ParseError(f"bad operator token {tok!r} (expected e.g. 'e2' or 'f1^3')", 1, col)
        steps.append((int(m.group(2)), m.group(1), int(m.group(3) or 1)))
        col += len(tok) + 1
    return CrystalOpSequence(tuple(steps))


def format_ops(seq: CrystalOpSequence) -> str:
    return " ".join(f"{d.value}{i}" + (f"^{k}" if k > 1 else "") for i, d, k in seq.steps)


def _apply_one(node, i, d):
    if isinstance(node, Ptableau):
        return crystal_ptab(node, i, d)
    if isinstance(node, Biword):
        return crystal_biword(node, i, d)
    return crystal_word(node, i, d)


def apply_ops(node, seq: CrystalOpSequence):
    """Apply every step to a ptableau, biword or word; NULL aborts with :class:`NullStep`."""
    for idx, (i, d) in enumerate(seq.expand(), start=1):
        nxt = _apply_one(node, i, d)
        if nxt is None:
            raise NullStep(f"step {idx} ({d.value}{i}) is NULL", idx, (i, d))
        node = nxt
    return node


def _indices(node):
    if isinstance(node, Ptableau):
        return range(1, node.n_rows)
    word = node.bottom if isinstance(node, Biword) else node
    return range(1, max(word, default=1))


def to_extreme(node, target: str = HIGHEST, order: str = "smallest"):
    """Greedily raise (or lower) until no operator applies.

    Returns the extreme node and the path taken.  Each step moves a cell
    one row, so the row-index sum is a strictly monotone potential.
    """
    d = RAISE if target == HIGHEST else LOWER
    moves = []
    while True:
        indices = list(_indices(node))
        if order != "smallest":
            indices.reverse()
        for i in indices:
            nxt = _apply_one(node, i, d)
            if nxt is not None:
                node = nxt
                moves.append((i, d))
                break
        else:
            return node, CrystalOpSequence.from_moves(moves)
