import io
import json

import pytest

from ptabkit.cli import main
from ptabkit.duality import dual_ptab, rot
from ptabkit.grid import to_text
from ptabkit.involutions import lusztig
from ptabkit.rsk import ptab_rsk

from conftest import ptab

RUNNING = ". . 1 3 4\n1 2 2 . .\n3 3 4 4 .\n"


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_rsk_prints_pt_and_tmax(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rsk"], RUNNING)
    assert code == 0
    pair = ptab_rsk(ptab("..134", "122..", "3344."))
    assert out == to_text(pair.pt) + "\n\n" + to_text(pair.tmax) + "\n"
    assert out.split("\n\n")[1].splitlines() == ["1 1 2 3 4", "2 3 4 4 .", "3 . . . ."]


def test_rsk_from_biword_with_trace(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rsk", "--trace"], "1122333444/2122331331\n")
    assert code == 0
    trace_lines = [line for line in out.splitlines() if line.startswith("# ")]
    assert trace_lines[0] == "# 1: insert content=1 row=2"
    assert "# 10: terminal eta=1" in trace_lines


def test_rsk_json(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["rsk", "--format", "json"], RUNNING)
    obj = json.loads(out)
    assert obj["Tmax"] == [[1, 1, 2, 3, 4], [2, 3, 4, 4, None], [3, None, None, None, None]]


def test_hw_on_biword_prints_eta(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["hw"], "1122333444/2122331331\n")
    assert code == 0
    assert "eta: 1121321221" in out.splitlines()
    assert out.splitlines()[0] == "1122333444/1121321221"


def test_classic_rsk(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["classic-rsk"], "1122333444/2122331331\n")
    assert code == 0
    p, q = out.strip().split("\n\n")
    assert p.splitlines() == ["1 1 1 2 2", "2 3 3 3 .", "3 . . . ."]
    assert q.splitlines() == ["1 1 2 3 4", "2 3 4 4 .", "3 . . . ."]


def test_rsk_then_unrsk(monkeypatch, capsys):
    _, out, _ = run(monkeypatch, capsys, ["rsk"], RUNNING)
    code, back, _ = run(monkeypatch, capsys, ["unrsk"], out)
    assert code == 0
    assert back == to_text(ptab("..134", "122..", "3344.")) + "\n"


def test_apply_empty_ops(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["apply", "--ops", ""], RUNNING)
    assert code == 0
    assert out == to_text(ptab("..134", "122..", "3344.")) + "\n"


def test_apply_null_step_is_domain_error(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["apply", "--ops", "e1 e1"], ". 1\n1 .\n")
    assert code == 1
    assert "NullStep" in err


def test_parse_error_exit_code(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["dual"], "1 2\n3 x\n")
    assert code == 2
    assert "line 2" in err


def test_ambiguous_line_needs_hint(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["hw"], "212\n")
    assert code == 2 and "--as word" in err
    code, out, _ = run(monkeypatch, capsys, ["hw", "--as", "word"], "212\n")
    assert code == 0 and out.splitlines()[0] == "112"


def test_comments_are_ignored(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["bw"], "# the running example\n" + RUNNING)
    assert code == 0 and out == "1122333444/2122331331\n"


def test_dual_rot_perf_matrix(monkeypatch, capsys):
    T = ptab("..134", "122..", "3344.")
    _, out, _ = run(monkeypatch, capsys, ["dual"], RUNNING)
    assert out == to_text(dual_ptab(T)) + "\n"
    _, out, _ = run(monkeypatch, capsys, ["rot", "--m", "5"], RUNNING)
    assert out == to_text(rot(T, 5)) + "\n"
    _, out, _ = run(monkeypatch, capsys, ["perf", "--right"], "1122333444/2122331331\n")
    assert out == RUNNING
    _, out, _ = run(monkeypatch, capsys, ["matrix"], "1122333444/2122331331\n")
    assert out == "1 1 0\n0 2 0\n1 0 2\n1 0 2\n"
    _, out, _ = run(monkeypatch, capsys, ["matrix", "--as", "matrix"], "1 1 0\n0 2 0\n1 0 2\n1 0 2\n")
    assert out == "1122333444/2122331331\n"


def test_lus_evac_estar(monkeypatch, capsys):
    T = ". . 1 1 . .\n. . 2 3 4 4\n1 1 3 4 5 .\n"
    _, out, _ = run(monkeypatch, capsys, ["estar"], T)
    assert out == "e1^2 e2^3 e1^2\n"
    code, out, _ = run(monkeypatch, capsys, ["lus"], T)
    assert code == 0
    assert out == to_text(lusztig(ptab("..11..", "..2344", "11345."))) + "\n"
    assert out == to_text(ptab(".11144", "1.23.5", "..34..")) + "\n"
    _, out, _ = run(monkeypatch, capsys, ["evac"], "1 1 1 1 4 4\n2 3 5 . . .\n3 4 . . . .\n")
    assert out == to_text(ptab("....11", "...234", "113445")) + "\n"


def test_evac_rejects_non_highest(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["evac"], ". 1\n1 .\n")
    assert code == 1 and "NotHighestWeight" in err


def test_graph_dot_and_json(monkeypatch, capsys, tmp_path):
    code, out, _ = run(monkeypatch, capsys, ["graph"], "1\n.\n")
    assert code == 0 and out.startswith("digraph crystal {")
    target = tmp_path / "g.json"
    code, out, _ = run(monkeypatch, capsys, ["graph", "--json", "-o", str(target)], "1\n.\n")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["edges"] == [{"from": 0, "i": 1, "to": 1}]


def test_graph_limit(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["graph", "--limit", "3"], "1 1\n2 .\n. .\n")
    assert code == 1 and "LimitExceeded" in err
    code, out, err = run(monkeypatch, capsys, ["graph", "--limit", "3", "--partial"], "1 1\n2 .\n. .\n")
    assert code == 0 and "partial" in err and out.count("[label=") >= 3


def test_check_is_reproducible(monkeypatch, capsys):
    code, first, _ = run(monkeypatch, capsys, ["check", "--seed", "5", "--count", "30"])
    _, second, _ = run(monkeypatch, capsys, ["check", "--seed", "5", "--count", "30"])
    assert code == 0 and first == second
    assert "all checks passed (seed 5, 30 instances)" in first


def test_check_failure_exit_code(monkeypatch, capsys):
    from ptabkit import checks

    def broken(b, n):
        assert len(b) < 2, "too long"

    monkeypatch.setitem(checks.SUITES, "rsk", [broken])
    code, out, _ = run(monkeypatch, capsys, ["check", "--suite", "rsk", "--count", "50", "--format", "json"])
    assert code == 3
    obj = json.loads(out)
    assert not obj["ok"] and len(obj["failure"]["minimized"].split("/")[0]) == 2


def test_file_input(monkeypatch, capsys, tmp_path):
    path = tmp_path / "t.txt"
    path.write_text(RUNNING)
    code, out, _ = run(monkeypatch, capsys, ["bw", str(path)])
    assert code == 0 and out == "1122333444/2122331331\n"
    code, _, err = run(monkeypatch, capsys, ["bw", str(tmp_path / "missing.txt")])
    assert code == 1


def test_unknown_command_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
