"""Closed-form raising paths, evacuation, and the Lusztig involution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .crystal import CrystalOpSequence, apply_ops, is_highest_weight
from .duality import rot, satisfies_word_condition
from .errors import MethodDisagreement, NotHighestWeight, WordConditionPrecondition
from .grid import Ptableau
from .rsk import ptab_rsk, rsk_inverse
from .words import RAISE

UNINSERT = "uninsert"
ESTAR = "estar"
BOTH = "both"


@dataclass(frozen=True)
class AlphaTable:
    """``alpha[i-1][j-1]`` counts the i's in row j; ``beta`` holds the column sums over i."""

    alpha: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, pt: Ptableau) -> "AlphaTable":
        n = pt.n_rows
        table = [[0] * n for _ in range(n)]
        for c, r in pt.cells:
            if c > n:
                raise WordConditionPrecondition(f"content {c} cannot occur in a {n}-row distinguished crystal")
            table[c - 1][r - 1] += 1
        return cls(tuple(tuple(row) for row in table))

    def beta(self, s: int, t: int) -> int:
        return sum(self.alpha[i][t - 1] for i in range(s))


def e_star_sequence(pt: Ptableau) -> CrystalOpSequence:
    """Raising path from ``pt`` (and anything plactic to it) to its highest weight.

    Block ``l`` raises ``s = 1 .. n-l`` with exponent ``beta(s, s+l)``;
    blocks run ``l = 1 .. n-1``, and the first step listed is applied first.
    """
    if not satisfies_word_condition(pt):
        raise WordConditionPrecondition("e_(*) needs a ptableau satisfying the word condition")
    table = AlphaTable.of(pt)
    n = pt.n_rows
    steps = []
    for block in range(1, n):
        for s in range(1, n - block + 1):
            k = table.beta(s, s + block)
            if k:
                steps.append((s, RAISE, k))
    return CrystalOpSequence(tuple(steps))


def _slide_in(grid, r, c):
    # hole at (r, c) moves north-west, pulling in the larger neighbour
    while True:
        up = grid[r - 1][c] if r > 0 else None
        left = grid[r][c - 1] if c > 0 else None
        if up is None and left is None:
            return
        if left is None or (up is not None and up >= left):
            grid[r][c], grid[r - 1][c] = up, None
            r -= 1
        else:
            grid[r][c], grid[r][c - 1] = left, None
            c -= 1


def evacuate(tmax: Ptableau) -> Ptableau:
    """Lowest-weight ptableau of the component of a highest-weight ``tmax``.

    The SSYT is placed in an ``n_rows x width`` rectangle, and inward
    jeu de taquin slides are run from the top-most outer corner until the
    content fills the rectangle's bottom-right.
    """
    if not is_highest_weight(tmax):
        raise NotHighestWeight("evacuation needs a highest-weight ptableau")
    n, width = tmax.n_rows, tmax.n_cols
    grid = [list(row) for row in tmax.left]
    # outer edge of the occupied region, per row
    outer = [sum(1 for v in row if v is not None) for row in grid]
    while True:
        corner = next(
            (r for r in range(n) if outer[r] < width and (r == 0 or outer[r - 1] > outer[r])),
            None,
        )
        if corner is None:
            break
        _slide_in(grid, corner, outer[corner])
        outer[corner] += 1
    cells = [(v, r + 1) for r, row in enumerate(grid) for v in row if v is not None]
    return Ptableau(tuple(cells), n)


def reversed_sequence(seq: CrystalOpSequence, n: int) -> CrystalOpSequence:
    """Expand, reverse, and replace each index ``i`` by ``n - i``."""
    moves = [(n - i, d) for i, d in reversed(seq.expand())]
    return CrystalOpSequence.from_moves(moves)


def lusztig(T: Ptableau, method: str = UNINSERT, m: Optional[int] = None) -> Ptableau:
    """Lusztig involution of ``T`` inside its irreducible component.

    ``method`` is ``"uninsert"`` (undo RSK against the rotated lowest
    weight), ``"estar"`` (reversed closed-form path from the lowest
    weight), or ``"both"``, which runs the two and insists they agree.
    """
    if m is None:
        m = max(1, T.max_content)
    pair = ptab_rsk(T)
    tmin = evacuate(pair.tmax)
    results = {}
    if method in (UNINSERT, BOTH):
        results[UNINSERT] = rot(rsk_inverse(pair.pt, rot(tmin, m)), m)
    if method in (ESTAR, BOTH):
        path = reversed_sequence(e_star_sequence(pair.pt), T.n_rows)
        results[ESTAR] = apply_ops(tmin, path)
    if not results:
        raise ValueError(f"unknown method {method!r}")
    values = list(results.values())
    if any(v != values[0] for v in values[1:]):
        raise MethodDisagreement(f"lusztig methods disagree on {T.cells}: {results}")
    return values[0]


def lusztig_by_path(T: Ptableau) -> Ptableau:
    """Reference version: greedy raising path to the top, mirrored from the bottom."""
    from .crystal import to_extreme

    top, path = to_extreme(T)
    bottom, _ = to_extreme(top, "lowest")
    mirrored = reversed_sequence(path, T.n_rows)
    return apply_ops(bottom, mirrored)
