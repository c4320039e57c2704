"""Bijections and dualities between biwords, ptableaux and matrices.

Also home to the violation scan and the word condition, which together
characterise membership in a distinguished crystal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import ContentExceedsAlphabet, MalformedInput
from .grid import CellRef, Ptableau
from .words import Biword, standardize

IntMatrix = Tuple[Tuple[int, ...], ...]


def perf(b: Biword, n_rows: Optional[int] = None) -> Ptableau:
    """Ptableau with content ``top[j]`` in row ``bottom[j]`` for every column."""
    return Ptableau.from_cells(zip(b.top, b.bottom), n_rows)


def bw(T: Ptableau) -> Biword:
    # cells are already in standard order
    return Biword(tuple(c for c, _ in T.cells), tuple(r for _, r in T.cells))


def dual_ptab(T: Ptableau, n_rows: Optional[int] = None) -> Ptableau:
    """Swap the roles of content and row.

    The dual lives in ``max content`` rows unless ``n_rows`` says otherwise.
    """
    if n_rows is None:
        n_rows = max(1, T.max_content)
    return Ptableau(tuple((r, c) for c, r in T.cells), n_rows)


def rot(T: Ptableau, m: Optional[int] = None) -> Ptableau:
    """Rotate by 180 degrees and complement content ``j -> m - j + 1``."""
    if m is None:
        m = max(1, T.max_content)
    if T.max_content > m:
        raise ContentExceedsAlphabet(f"content {T.max_content} exceeds alphabet bound {m}")
    n = T.n_rows
    return Ptableau(tuple((m - c + 1, n - r + 1) for c, r in T.cells), n)


def to_matrix(b: Biword, m: Optional[int] = None, n: Optional[int] = None) -> IntMatrix:
    m = max(b.top, default=0) if m is None else m
    n = max(b.bottom, default=0) if n is None else n
    if any(t > m for t in b.top) or any(w > n for w in b.bottom):
        raise ContentExceedsAlphabet(f"biword does not fit a {m}x{n} matrix")
    M = [[0] * n for _ in range(m)]
    for t, w in b.pairs:
        M[t - 1][w - 1] += 1
    return tuple(tuple(row) for row in M)


def from_matrix(M: Sequence[Sequence[int]]) -> Biword:
    pairs = []
    for i, row in enumerate(M, start=1):
        for j, a in enumerate(row, start=1):
            if a < 0:
                raise MalformedInput(f"negative matrix entry at ({i}, {j})")
            pairs.extend([(i, j)] * a)
    return standardize(pairs)


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(col) for col in zip(*M))


def format_matrix(M) -> str:
    return "\n".join(" ".join(str(a) for a in row) for row in M)


@dataclass(frozen=True)
class Violation:
    cell: CellRef  # right-justified coordinates
    multiplicity: int


def violations(T: Ptableau) -> List[Violation]:
    """Violation entries of ``T``, right-most column first, bottom-up within a column."""
    grid = T.right
    found = []
    for col in range(T.n_cols - 1, -1, -1):
        for row in range(T.n_rows - 1, -1, -1):
            s = grid[row][col]
            if s is None or s < 2:
                continue
            above = [grid[r][col] for r in range(row) if grid[r][col] is not None]
            if s - 1 in above:
                continue
            s_prime = above[-1] if above else 0
            found.append(Violation(CellRef(s, row + 1, col + 1), s - s_prime - 1))
    return found


def satisfies_word_condition(T: Ptableau) -> bool:
    """Counting test for membership in a distinguished crystal.

    For every ``i`` and every row bound ``r``: the number of ``(i+1)``'s in
    rows ``<= r`` is at most the number of ``i``'s in rows ``<= r - 1``.
    """
    m = T.max_content
    n = T.n_rows
    counts = {}
    for c, r in T.cells:
        counts[c, r] = counts.get((c, r), 0) + 1
    for i in range(1, m):
        lower = 0
        upper = 0
        for r in range(1, n + 1):
            upper += counts.get((i + 1, r), 0)
            if upper > lower:
                return False
            lower += counts.get((i, r), 0)
    return True


def mu_tableau(mu: Sequence[int]) -> Ptableau:
    """``T_mu``: ``mu[i-1]`` copies of ``i`` in row ``i``."""
    cells = [(i, i) for i, part in enumerate(mu, start=1) for _ in range(part)]
    return Ptableau(tuple(cells), max(1, len(mu)))


def content_shape(T: Ptableau) -> Tuple[int, ...]:
    """Number of cells of each content value 1..max content."""
    parts = [0] * T.max_content
    for c, _ in T.cells:
        parts[c - 1] += 1
    return tuple(parts)
