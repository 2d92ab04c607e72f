import io
import itertools
import subprocess
import sys

import numpy as np
import pytest

from toruspuzzle.cli import BENCH_HEADER, main, parse_seeds, parse_sizes
from toruspuzzle.core import format_instance


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


@pytest.fixture
def inst(tmp_path):
    def write(a, name="a.txt"):
        p = tmp_path / name
        p.write_text(format_instance(np.asarray(a)))
        return str(p)
    return write


def test_solve_sorted_stats(inst, capsys):
    code, out, _ = run(["solve", inst(np.arange(1, 13).reshape(3, 4)), "--emit", "stats"], capsys)
    assert code == 0
    s = kv(out)
    assert int(s["push"]) > 0 and s["check.sorted"] == "ok"
    # the final row-sorting stage alone costs 6n on sorted input
    assert int(s["phase.swap_pairs.push"]) == 6 * 4


def test_solve_unsortable(inst, capsys):
    code, out, err = run(["solve", inst([[1, 2, 3], [4, 5, 6], [7, 9, 8]])], capsys)
    assert code == 3 and out == ""
    assert err.startswith("error: unsortable: 3x3 parity=odd")
    assert "m is even, n is even, or the arrangement is an even permutation" in err
    assert err.count("\n") == 1


def test_solve_every_two_by_three(inst, capsys):
    for p in itertools.permutations(range(1, 7)):
        code, _, _ = run(["solve", inst(np.array(p).reshape(2, 3)), "--check", "--emit", "stats"], capsys)
        assert code == 0


def test_solve_naive_engine_and_restricted(inst, capsys):
    path = inst(np.array([[5, 2, 7, 1], [8, 3, 6, 4]]))
    outs = []
    for engine in ("naive", "fast"):
        code, out, _ = run(["solve", path, "--engine", engine, "--mode", "restricted", "--check"], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_solve_both_streams(inst, capsys, tmp_path):
    path = inst(np.array([[4, 3], [2, 1]]))
    code, out, err = run(["solve", path, "--emit", "both"], capsys)
    assert code == 0 and out.strip() and "push=" in err
    moves, stats = tmp_path / "m.txt", tmp_path / "s.txt"
    code, out, _ = run(["solve", path, "--emit", "both", "-o", str(moves), "--stats", str(stats)], capsys)
    assert code == 0 and out == ""
    assert "push=" in stats.read_text()
    code, out, _ = run(["verify", path, str(moves)], capsys)
    assert code == 0 and kv(out)["final_sorted"] == "true"


def test_solve_stdin(capsys, monkeypatch):
    code, out, _ = run(["solve", "-"], capsys, stdin="2 2\n4 3\n2 1\n", monkeypatch=monkeypatch)
    assert code == 0 and out.strip()


def test_solve_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("2 2\n1 2\n3 x\n")
    code, _, err = run(["solve", str(p)], capsys)
    assert code == 1 and err.startswith("error: parse: 3:3:")


def test_io_and_usage_errors(capsys):
    code, _, err = run(["solve", "/nonexistent/file"], capsys)
    assert code == 1 and err.startswith("error: io:")
    code, _, err = run(["frobnicate"], capsys)
    assert code == 1 and err.startswith("error: usage:")
    code, _, err = run(["bench", "--sizes", "8by8"], capsys)
    assert code == 1 and err.startswith("error: usage:")


def test_scramble_examples(capsys, tmp_path, monkeypatch):
    code, out, _ = run(["scramble", "3", "4", "--steps", "0"], capsys)
    assert code == 0 and out == "3 4\n1 2 3 4\n5 6 7 8\n9 10 11 12\n"
    a = run(["scramble", "5", "6", "--seed", "11", "--steps", "300"], capsys)[1]
    b = run(["scramble", "5", "6", "--seed", "11", "--steps", "300"], capsys)[1]
    assert a == b and a != run(["scramble", "5", "6", "--seed", "12", "--steps", "300"], capsys)[1]
    code, out, _ = run(["solve", "-", "--check", "--emit", "stats"], capsys, stdin=a,
                       monkeypatch=monkeypatch)
    assert code == 0 and kv(out)["check.replay"] == "ok"
    code, _, err = run(["scramble", "3", "3", "--steps", "-1"], capsys)
    assert code == 1 and err.startswith("error: domain:")


def test_verify(inst, tmp_path, capsys):
    path = inst(np.array([[3, 1, 2], [4, 5, 6]]))
    good = tmp_path / "good.txt"
    good.write_text("r1*2\n")
    code, out, _ = run(["verify", path, str(good)], capsys)
    assert code == 0 and kv(out)["push"] == "2"
    bad = tmp_path / "bad.txt"
    bad.write_text("r1\n")
    code, out, err = run(["verify", path, str(bad)], capsys)
    assert code == 2 and kv(out)["final_sorted"] == "false" and err.startswith("error: verify:")
    left = tmp_path / "left.txt"
    left.write_text("l1\n")
    code, out, err = run(["verify", path, str(left), "--policy", "forward"], capsys)
    assert code == 2 and kv(out)["legal"] == "false"
    wild = tmp_path / "wild.txt"
    wild.write_text("d9\n")
    assert run(["verify", path, str(wild)], capsys)[0] == 1
    tok = tmp_path / "tok.txt"
    tok.write_text("r1 q2\n")
    code, _, err = run(["verify", path, str(tok)], capsys)
    assert code == 1 and err.startswith("error: parse: 1:4:")


def test_verify_solver_output(inst, tmp_path, capsys):
    rng = np.random.default_rng(3)
    path = inst((rng.permutation(30) + 1).reshape(5, 6))
    moves = tmp_path / "m.txt"
    assert run(["solve", path, "-o", str(moves)], capsys)[0] == 0
    code, out, _ = run(["verify", path, str(moves)], capsys)
    assert code == 0 and kv(out)["final_sorted"] == "true"


def test_oracle(inst, capsys, tmp_path):
    code, out, _ = run(["oracle", "3", "3", "--reachable"], capsys)
    assert code == 0 and kv(out)["reachable_count"] == "181440"
    hist = tmp_path / "h.csv"
    code, out, _ = run(["oracle", "2", "2", "--reachable", "--histogram", str(hist)], capsys)
    assert hist.read_text().startswith("depth,count\n0,1\n")
    code, out, _ = run(["oracle", "2", "2", "--optimal", inst([[2, 1], [3, 4]])], capsys)
    assert code == 0 and kv(out)["push_number"] == "1"
    code, _, err = run(["oracle", "3", "4", "--reachable"], capsys)
    assert code == 1 and err.startswith("error: cap:")
    code, _, err = run(["oracle", "3", "3", "--optimal", inst([[2, 1, 3], [4, 5, 6], [7, 8, 9]])], capsys)
    assert code == 3


def test_bench(capsys, tmp_path):
    out_csv = tmp_path / "b.csv"
    code, out, _ = run(["bench", "--sizes", "8x8,16x16,32x32", "--seeds", "0-2", "--csv", str(out_csv)],
                       capsys)
    assert code == 0
    rows = out_csv.read_text().splitlines()
    assert rows[0] == BENCH_HEADER and len(rows) == 10
    ratios = []
    for r in rows[1:]:
        m, n, seed, push, drag, ns, ratio = r.split(",")
        assert int(push) >= int(drag) > 0 and int(ns) > 0 and float(ratio) > 0
        ratios.append(float(ratio))
    summary = kv(out.replace(" ", "\n"))
    assert float(summary["max_bound_ratio"]) / float(summary["min_bound_ratio"]) <= 2.0
    assert float(summary["min_bound_ratio"]) == pytest.approx(min(ratios), abs=1e-6)


def test_grammar():
    assert parse_sizes("8x8, 4X16") == [(8, 8), (4, 16)]
    assert parse_seeds("0-2,7") == [0, 1, 2, 7]


def test_console_script(tmp_path):
    res = subprocess.run([sys.executable, "-m", "toruspuzzle.cli", "scramble", "2", "2", "--steps", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2 2\n1 2\n3 4\n"
