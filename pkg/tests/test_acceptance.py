"""Acceptance criteria 1-10, one reported verdict line per criterion.

Criteria 1-7 are exact golden comparisons against the worked examples.
Criteria 8-10 run the seeded property checks on at least 500 random
instances per suite (m, n <= 5, k <= 10) within a shared 60 second budget.
"""

import random
import time
from collections import Counter

import pytest

from ptabkit import checks
from ptabkit.crystal import apply_ops, crystal_ptab, eps_phi, format_ops, is_highest_weight
from ptabkit.duality import bw, dual_ptab, mu_tableau, perf, rot, violations
from ptabkit.errors import ColumnStrictnessViolation
from ptabkit.graph import explore, weyl_dimension
from ptabkit.grid import LEFT, RIGHT, justify, validate
from ptabkit.involutions import e_star_sequence, evacuate, lusztig, reversed_sequence
from ptabkit.rsk import classic_rsk, highest_weight_word, ptab_rsk, rsk_inverse
from ptabkit.words import LOWER, RAISE, crystal_biword, parse_biword

from conftest import all_biwords, grid, ptab

INSTANCES = 500
SEED = 20240
BUDGET = 60.0
_elapsed = {}


@pytest.fixture
def verdict(capsys):
    """Run a criterion body and print exactly one PASS/FAIL line for it."""

    def run(number, title, body):
        try:
            start = time.perf_counter()
            body()
            if number <= 7:
                took = time.perf_counter() - start
                assert took < 1.0, f"golden check took {took:.2f} s"
        except BaseException:
            with capsys.disabled():
                print(f"\nacceptance criterion {number:>2}: FAIL  {title}")
            raise
        with capsys.disabled():
            print(f"\nacceptance criterion {number:>2}: PASS  {title}")

    return run


INTRO = parse_biword("1122333444/2122331331")
RUNNING_T = ("..134", "122..", "3344.")


def test_criterion_1(verdict):
    def body():
        pair = classic_rsk(INTRO, 3)
        assert pair.q == ptab("11234", "2344.", "3....")
        # corrected P: bottom row 3, the only column-strict choice with the weight of omega
        assert pair.p == ptab("11122", "2333.", "3....")
        assert highest_weight_word(pair.q) == (1, 1, 2, 1, 3, 2, 1, 2, 2, 1)
        assert sorted(v for row in pair.p.left for v in row if v) == sorted(INTRO.bottom)
        # the displayed bottom row of 2 cannot be right
        with pytest.raises(ColumnStrictnessViolation):
            validate(grid("11122", "2333.", "2...."))

    verdict(1, "classic RSK of the intro biword gives (P, Q) and eta = 1121321221", body)


TABLE = [
    ((".", "1", "."), (".", "1", "."), ("1", ".", ".")),
    ((".1", "1.", ".."), (".1", "1.", ".."), ("11", "..", "..")),
    ((".1", "12", ".."), (".1", "12", ".."), ("11", "2.", "..")),
    (("..1", "122", "..."), ("..1", "112", "..."), ("112", "2..", "...")),
    (("..1", "122", "..3"), ("..1", "112", "..3"), ("112", "2..", "3..")),
    (("..1", "122", ".33"), ("..1", "112", ".23"), ("112", "23.", "3..")),
    (("..13", "122.", ".33."), ("..11", "11.2", "..23"), ("1123", "23..", "3...")),
    (("..13", "122.", ".334"), ("..11", "11.2", ".223"), ("1123", "234.", "3...")),
    (("..13", "122.", "3344"), ("..11", "11.2", "2223"), ("1123", "2344", "3...")),
    (("..134", "122..", "3344."), ("..111", "11..2", ".2223"), ("11234", "2344.", "3....")),
]


def test_criterion_2(verdict):
    def body():
        history = []
        ptab_rsk(ptab(*RUNNING_T), history=history)
        assert len(history) == len(TABLE) == 10
        for k, (row, got) in enumerate(zip(TABLE, history), start=1):
            assert got == tuple(ptab(*g) for g in row), f"table row {k}"

    verdict(2, "ptab_rsk reproduces all ten (T^(k), PT^(k), Tmax^(k)) table rows", body)


def test_criterion_3(verdict):
    def body():
        T = ptab(*RUNNING_T)
        assert bw(T) == INTRO
        pair = ptab_rsk(T)
        classic = classic_rsk(INTRO, 3)
        assert pair.tmax == classic.q
        assert pair.pt == dual_ptab(classic.p, 3)

    verdict(3, "tmax = Q and pt = dual(P) on the running example", body)


LUS_T = ("..11..", "..2344", "11345.")
LUS_PT = ("....11", "..1122", "11.233")
LUS_TMAX = ("111144", "235...", "34....")
LUS_TMIN = ("....11", "...234", "113445")
LUS_TLUS = (".11144", "1.23.5", "..34..")


def test_criterion_4(verdict):
    def body():
        T = ptab(*LUS_T)
        assert T == perf(parse_biword("11112334445/33112323223"), 3)
        pair = ptab_rsk(T)
        assert pair.pt == ptab(*LUS_PT) and pair.tmax == ptab(*LUS_TMAX)
        classic = classic_rsk(bw(T), 3)
        assert classic.p == ptab("112233", "223...", "33....") and classic.q == pair.tmax
        seq = e_star_sequence(pair.pt)
        assert format_ops(seq) == "e1^2 e2^3 e1^2"
        assert apply_ops(T, seq) == pair.tmax
        assert apply_ops(pair.pt, seq) == ptab("111111", "222...", "33....")
        tmin = evacuate(pair.tmax)
        assert tmin == ptab(*LUS_TMIN)
        # summary diagram: Rot(T_min), the uninserted node, and T_Lus
        tmax_rot = rot(tmin, 5)
        assert tmax_rot == ptab("122355", "234...", "55....")
        back = rsk_inverse(pair.pt, tmax_rot)
        assert back == ptab("....23", "..1345", "22555.")
        assert rot(back, 5) == ptab(*LUS_TLUS)
        mirrored = reversed_sequence(seq, 3)
        assert format_ops(mirrored) == "e2^2 e1^3 e2^2"
        assert apply_ops(tmin, mirrored) == ptab(*LUS_TLUS)
        assert lusztig(T, "both") == ptab(*LUS_TLUS)

    verdict(4, "RSK, e_(*), Evac and T_Lus on the Lusztig example, with the summary diagram nodes", body)


def test_criterion_5(verdict):
    def body():
        tmax = ptab("112234", "2334..", "345...")
        assert is_highest_weight(tmax)
        assert evacuate(tmax) == ptab("...123", "..2234", "133445")

    verdict(5, "evacuation of the three-row T_max", body)


def test_criterion_6(verdict):
    def body():
        rows = grid("....114", ".1.1.25", "123445.")
        assert justify(rows, LEFT) == tuple(map(tuple, grid("...114.", ".112..5", "123445.")))
        assert justify(rows, RIGHT) == tuple(map(tuple, grid("....114", "..11.25", "123445.")))
        T = ptab("........445", ".....112..6", "...11.24567", "112333466..")
        assert eps_phi(T, 2)[0] == 3
        E = crystal_ptab(T, 2, RAISE, verify=True)
        assert Counter(T.cells) - Counter(E.cells) == Counter({(6, 3): 1})
        assert Counter(E.cells) - Counter(T.cells) == Counter({(6, 2): 1})
        assert E == ptab("........445", "....112..66", "..112..45.7", "112333466..")
        R = rot(ptab("........445", ".....112.56", "...11.24567", "112333466.8"), 8)
        assert R == ptab("1.335666788", "23457.88...", "34.788.....", "455........")
        assert not is_highest_weight(ptab("....114", "..11.25", "123445."))
        Tp = ptab("1111144", ".2.446.", "..3.5..")
        assert is_highest_weight(Tp)
        assert Tp.left == ptab("1111144", "2446...", "35.....").left

    verdict(6, "justify, e_2 with eps_2 = 3, Rot display and highest-weight verdicts", body)


def test_criterion_7(verdict):
    def body():
        T = perf(parse_biword("11122233/22133132"), 3)
        assert dual_ptab(T) == ptab(".122", "1.33", "23..")
        V = ptab("..13", "11..", "223.")
        found = [(v.cell.content, v.cell.row, v.cell.col, v.multiplicity) for v in violations(V)]
        assert found == [(3, 1, 4, 2), (3, 3, 3, 1)]
        D = dual_ptab(V)
        assert D.left == ptab(".122", "..33", "13..").left
        # the 1 in row 3 has two blanks above, the 3 in row 3 has one
        assert D.left[2][0] == 1 and D.left[1][0] is None and D.left[0][0] is None
        assert D.left[2][1] == 3 and D.left[1][1] is None and D.left[0][1] == 1

    verdict(7, "dual, violation multiplicities 2 and 1, and the matching blanks in the dual", body)


def _run_suite(check_list, seed):
    rng = random.Random(seed)
    start = time.perf_counter()
    for idx in range(INSTANCES):
        b, n = checks.random_instance(rng)
        for check in check_list:
            try:
                check(b, n)
            except AssertionError as exc:
                small = checks.minimize(check, b, n)
                raise AssertionError(f"{check.__name__} failed on instance {idx} ({b}, n={n}); minimized {small}: {exc}")
    return time.perf_counter() - start


def test_criterion_8(verdict):
    def body():
        _elapsed[8] = _run_suite([checks.check_roundtrips, checks.check_rsk_roundtrip], SEED)

    verdict(8, f"roundtrips on {INSTANCES} seeded instances", body)


def test_criterion_9(verdict):
    def body():
        _elapsed[9] = _run_suite(
            [
                checks.check_rsk_oracles,
                checks.check_word_condition,
                checks.check_insertion_steps,
                checks.check_dual_definition,
                checks.check_column_duality,
                checks.check_violation_blanks,
                checks.check_e_star,
            ],
            SEED + 1,
        )

    verdict(9, f"oracle equivalences on {INSTANCES} seeded instances", body)


def _shapes(cells, n):
    def parts(total, most, rows):
        if total == 0:
            yield ()
            return
        if rows == 0:
            return
        for p in range(min(total, most), 0, -1):
            for rest in parts(total - p, p, rows - 1):
                yield (p,) + rest

    for k in range(1, cells + 1):
        yield from parts(k, k, n)


def test_criterion_10(verdict):
    def body():
        start = time.perf_counter()
        for b in all_biwords(3, 3, 5):
            T = perf(b, 3)
            for i in (1, 2):
                for d in (RAISE, LOWER):
                    x = crystal_ptab(T, i, d, verify=True)
                    y = crystal_biword(b, i, d, 3)
                    assert (x is None) == (y is None) and (x is None or bw(x) == y)
        for n in (2, 3, 4, 5):
            for shape in _shapes(8 if n < 5 else 6, n):
                assert len(explore(mu_tableau(shape).with_rows(n))) == weyl_dimension(shape, n), shape
        fixed = time.perf_counter() - start
        crystal = _run_suite(checks.SUITES["crystal"], SEED + 2)
        lus = _run_suite(checks.SUITES["lusztig"], SEED + 3)
        _elapsed[10] = fixed + crystal + lus
        total = sum(_elapsed.values())
        assert total < BUDGET, f"property criteria took {total:.1f} s"

    verdict(10, f"crystal laws, Weyl dimensions and Lusztig laws on {INSTANCES} seeded instances", body)
