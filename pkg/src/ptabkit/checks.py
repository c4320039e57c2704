"""Seeded property suites behind ``ptabkit check``.

Every check takes a standard biword and a row count and raises
``AssertionError`` (or a library error) when a law fails.  The runner
shrinks a failing instance by dropping biword columns while it keeps
failing the same check.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .crystal import apply_ops, crystal_ptab, eps_phi, is_highest_weight, to_extreme
from .duality import (
    bw,
    dual_ptab,
    perf,
    rot,
    satisfies_word_condition,
    to_matrix,
    transpose,
    violations,
)
from .errors import PtabError
from .grid import Ptableau, extend, to_text
from .involutions import BOTH, e_star_sequence, evacuate, lusztig, lusztig_by_path
from .rsk import classic_rsk, column_insert, insert_resolve, ptab_rsk, rsk_inverse
from .words import LOWER, RAISE, Biword, crystal_biword, dual_biword, format_biword, standardize

Check = Callable[[Biword, int], None]


def random_instance(rng: random.Random, max_k=10, max_m=5, max_n=5) -> Tuple[Biword, int]:
    k = rng.randint(0, max_k)
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    pairs = [(rng.randint(1, m), rng.randint(1, n)) for _ in range(k)]
    return standardize(pairs), n


def _ptab(b, n):
    return perf(b, n)


# -- duality -------------------------------------------------------------------


def check_roundtrips(b, n):
    T = _ptab(b, n)
    assert bw(T) == b, "bw(perf(b)) != b"
    assert perf(bw(T), n) == T, "perf(bw(T)) != T"
    assert dual_ptab(dual_ptab(T), n) == T, "dual is not an involution"
    m = max(1, T.max_content)
    assert rot(rot(T, m), m) == T, "rot is not an involution"


def check_dual_definition(b, n):
    T = _ptab(b, n)
    assert dual_ptab(T) == perf(dual_biword(b), max(1, T.max_content)), "dual_ptab != perf . dual_biword . bw"
    assert to_matrix(dual_biword(b)) == transpose(to_matrix(b)) or len(b) == 0, "matrix of the dual is not the transpose"
    assert T.n_cols == dual_ptab(T).n_cols, "T and its dual differ in width"


def check_column_duality(b, n):
    T = _ptab(b, n)
    D = dual_ptab(T)
    width = T.n_cols
    for k in range(width):
        right = sorted((c.content, c.row) for c in T.located("right") if c.col == width - k)
        left = sorted((c.row, c.content) for c in D.located("left") if c.col == k + 1)
        assert right == left, f"column {width - k} of T* is not dual to column {k + 1} of *T-hat"


def check_violation_blanks(b, n):
    T = _ptab(b, n)
    D = dual_ptab(T)
    width = T.n_cols
    found = {(v.cell.content, v.cell.row, v.cell.col): v.multiplicity for v in violations(T)}
    grid = D.left
    for cell in D.located("left"):
        blanks = 0  # the run of blanks directly above the cell
        while blanks < cell.row - 1 and grid[cell.row - 2 - blanks][cell.col - 1] is None:
            blanks += 1
        key = (cell.row, cell.content, width - cell.col + 1)
        assert found.get(key, 0) == blanks, f"dual cell {cell} has {blanks} blanks above, violation says {found.get(key, 0)}"


def check_word_condition(b, n):
    T = _ptab(b, n)
    mu = [0] * T.n_rows
    for c, _ in T.cells:
        if c <= T.n_rows:
            mu[c - 1] += 1
    t_mu = Ptableau(tuple((i, i) for i, part in enumerate(mu, start=1) for _ in range(part)), T.n_rows)
    verdicts = {
        "word condition": satisfies_word_condition(T),
        "no violations": not violations(T),
        "dual highest weight": is_highest_weight(dual_ptab(T)),
        "highest weight is T_mu": T.max_content <= T.n_rows and to_extreme(T)[0] == t_mu,
    }
    assert len(set(verdicts.values())) == 1, f"membership tests disagree: {verdicts}"


# -- rsk -----------------------------------------------------------------------


def check_rsk_roundtrip(b, n):
    T = _ptab(b, n)
    assert rsk_inverse(ptab_rsk(T)) == T, "rsk_inverse(ptab_rsk(T)) != T"


def check_rsk_oracles(b, n):
    T = _ptab(b, n)
    pair = ptab_rsk(T)
    classic = classic_rsk(b, n)
    assert pair.tmax == classic.q, "T_max differs from classic Q"
    assert pair.tmax == to_extreme(T)[0], "T_max differs from greedy highest weight"
    assert pair.pt.cells == dual_ptab(classic.p).cells, "PT differs from the dual of classic P"
    assert satisfies_word_condition(pair.pt), "PT fails the word condition"
    swapped = classic_rsk(dual_biword(b))
    assert (swapped.p.cells, swapped.q.cells) == (classic.q.cells, classic.p.cells), "classic RSK of the dual is not (Q, P)"


def check_insertion_steps(b, n):
    pt = Ptableau.empty(n)
    for tau, omega in b.pairs:
        states: List[Ptableau] = []
        new, trace = insert_resolve(pt, tau, omega, intermediates=states)
        rows = max([1, tau] + [s.max_content for s in states])
        expected = column_insert(dual_ptab(pt, rows), omega)
        assert dual_ptab(new, rows).cells == expected.cells, "insertion is not dual to column insertion"
        for before, after, step in zip(states, states[1:], trace.decrements):
            raised = crystal_ptab(dual_ptab(before, rows), step.content - 1, RAISE)
            assert raised == dual_ptab(after, rows), f"decrement at {step} is not e_{step.content - 1} on the dual"
        pt = new


def check_e_star(b, n):
    T = _ptab(b, n)
    pair = ptab_rsk(T)
    path = e_star_sequence(pair.pt)
    assert apply_ops(T, path) == pair.tmax, "e_(*) does not take T to T_max"
    assert is_highest_weight(apply_ops(pair.pt, path)), "e_(*) does not take PT to highest weight"


# -- crystal -------------------------------------------------------------------


def check_crystal_laws(b, n):
    T = _ptab(b, n)
    for i in range(1, n):
        eps, phi = eps_phi(T, i)
        for d, other in ((RAISE, LOWER), (LOWER, RAISE)):
            x = crystal_ptab(T, i, d, verify=True)
            y = crystal_biword(b, i, d, n)
            assert (x is None) == (y is None), f"{d.value}{i}: ptableau and biword disagree on NULL"
            if x is None:
                continue
            assert bw(x) == y, f"{d.value}{i}: perf does not intertwine the operators"
            assert crystal_ptab(x, i, other) == T, f"{d.value}{i} is not undone by its partner"
            shift = 1 if d is RAISE else -1
            wt = list(T.weight)
            wt[i - 1] += shift
            wt[i] -= shift
            assert x.weight == tuple(wt), f"{d.value}{i} changes the weight wrongly"
        for d, count in ((RAISE, eps), (LOWER, phi)):
            steps, node = 0, T
            while (node := crystal_ptab(node, i, d)) is not None:
                steps += 1
            assert steps == count, f"{d.value}{i} applies {steps} times, expected {count}"


def check_rot_law(b, n):
    T = _ptab(b, n)
    m = max(1, T.max_content)
    R = rot(T, m)
    for i in range(1, n):
        lowered = crystal_ptab(T, n - i, LOWER)
        expect = None if lowered is None else rot(lowered, m)
        assert crystal_ptab(R, i, RAISE) == expect, f"e_{i} rot(T) != rot(f_{n - i} T)"


def check_extreme_order(b, n):
    T = _ptab(b, n)
    for target in ("highest", "lowest"):
        a, _ = to_extreme(T, target, "smallest")
        c, _ = to_extreme(T, target, "largest")
        assert a == c, f"{target} node depends on operator order"


def check_extension(b, n):
    """Highest weight of an extension extends the highest weight."""
    if len(b) == 0:
        return
    prefix = perf(b.prefix(len(b) - 1), n)
    tau, omega = b.pairs[-1]
    whole = extend(prefix, tau, omega)
    top = to_extreme(whole)[0]
    diff = Counter(top.cells) - Counter(to_extreme(prefix)[0].cells)
    assert sum(diff.values()) == 1 and next(iter(diff))[0] == tau, "highest weight does not extend"
    # initial factors: the highest weight of a prefix is a prefix of the highest weight
    assert crystal_top_word(b, n)[:-1] == crystal_top_word(b.prefix(len(b) - 1), n), "prefix law fails"


def crystal_top_word(b: Biword, n: int):
    node = b
    while True:
        for i in range(1, n):
            nxt = crystal_biword(node, i, RAISE, n)
            if nxt is not None:
                node = nxt
                break
        else:
            return node.bottom


# -- lusztig -------------------------------------------------------------------


def check_lusztig(b, n):
    T = _ptab(b, n)
    L = lusztig(T, BOTH)
    assert L == lusztig_by_path(T), "lusztig disagrees with the path definition"
    assert lusztig(L, BOTH) == T, "lusztig is not an involution"
    assert L.weight == T.weight[::-1], "lusztig does not reverse the weight"


def check_evacuation(b, n):
    tmax = ptab_rsk(_ptab(b, n)).tmax
    assert evacuate(tmax) == to_extreme(tmax, "lowest")[0], "evacuation misses the lowest weight"


SUITES: Dict[str, List[Check]] = {
    "duality": [check_roundtrips, check_dual_definition, check_column_duality, check_violation_blanks, check_word_condition],
    "rsk": [check_rsk_roundtrip, check_rsk_oracles, check_insertion_steps, check_e_star],
    "crystal": [check_crystal_laws, check_rot_law, check_extreme_order, check_extension],
    "lusztig": [check_lusztig, check_evacuation],
}


def checks_for(suite: str) -> List[Tuple[str, Check]]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        out.extend((name, check) for check in SUITES[name])
    return out


def _fails(check: Check, b: Biword, n: int) -> Optional[str]:
    try:
        check(b, n)
    except (AssertionError, PtabError) as exc:
        return f"{type(exc).__name__}: {exc}"
    return None


def minimize(check: Check, b: Biword, n: int) -> Biword:
    """Greedily drop biword columns while ``check`` keeps failing."""
    pairs = b.pairs
    shrunk = True
    while shrunk:
        shrunk = False
        for j in range(len(pairs)):
            trial = standardize(pairs[:j] + pairs[j + 1:])
            if _fails(check, trial, n):
                pairs = trial.pairs
                shrunk = True
                break
    return standardize(pairs)


@dataclass
class Failure:
    suite: str
    check: str
    instance: int
    biword: Biword
    n: int
    message: str
    minimized: Biword

    def report(self) -> str:
        T = perf(self.minimized, self.n)
        return "\n".join(
            [
                f"FAIL {self.suite}/{self.check} on instance {self.instance}: {self.message}",
                f"original: n={self.n} {format_biword(self.biword)}",
                f"minimized: n={self.n} {format_biword(self.minimized)}",
                to_text(T) if T.n_cols else "(empty ptableau)",
            ]
        )


@dataclass
class CheckReport:
    seed: int
    count: int
    counts: Dict[str, int] = field(default_factory=dict)
    failure: Optional[Failure] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def transcript(self) -> str:
        lines = [f"{name}: {k} instances ok" for name, k in self.counts.items()]
        if self.failure:
            lines.append(self.failure.report())
        else:
            lines.append(f"all checks passed (seed {self.seed}, {self.count} instances)")
        return "\n".join(lines)


def run_checks(seed: int = 0, count: int = 500, suite: str = "all") -> CheckReport:
    """Run the chosen suites on ``count`` seeded instances, stopping at the first failure."""
    selected = checks_for(suite)
    report = CheckReport(seed, count, {name: 0 for name, _ in selected})
    rng = random.Random(seed)
    for idx in range(count):
        b, n = random_instance(rng)
        for name, check in selected:
            message = _fails(check, b, n)
            if message:
                small = minimize(check, b, n)
                report.failure = Failure(name, check.__name__, idx, b, n, message, small)
                return report
        for name in report.counts:
            report.counts[name] += 1
    return report
