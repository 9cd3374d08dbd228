import json

import pytest

from almostsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_gens(capsys):
    code, out, _ = run(capsys, "info", "--gens", "6,7,8,9,10")
    assert code == 0
    rec = json.loads(out)
    assert rec["frobenius"] == 11
    assert rec["genus"] == 6
    assert rec["msg"] == [6, 7, 8, 9, 10]
    assert list(rec) == ["gaps", "msg", "pf", "frobenius", "genus", "type",
                         "multiplicity"]


def test_info_gaps(capsys):
    code, out, _ = run(capsys, "info", "--gaps", "1,2,3,4,5")
    assert code == 0
    rec = json.loads(out)
    assert rec["type"] == 5
    assert rec["pf"] == [1, 2, 3, 4, 5]


def test_info_not_numerical(capsys):
    code, _, err = run(capsys, "info", "--gens", "2,4")
    assert code == 2
    assert "gcd" in err


def test_info_closure_violation(capsys):
    code, _, err = run(capsys, "info", "--gaps", "2")
    assert code == 2


def test_as_ascending_11_7(capsys):
    code, out, _ = run(capsys, "as-ascending", "--frobenius", "11", "--type", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert [json.loads(l)["gaps"] for l in lines] == [
        [1, 2, 3, 4, 5, 6, 7, 8, 11], [1, 2, 3, 4, 5, 6, 7, 9, 11]]


def test_irreducible_count_only(capsys):
    code, out, _ = run(capsys, "irreducible", "--frobenius", "11", "--count-only")
    assert code == 0
    records = [json.loads(l) for l in out.strip().splitlines()]
    assert records[-1] == {"total": 6}


def test_as_descending_5(capsys):
    code, out, _ = run(capsys, "as-descending", "--frobenius", "5")
    assert code == 0
    assert len(out.strip().splitlines()) == 4


def test_oracle_limit(capsys):
    code, _, err = run(capsys, "oracle", "--frobenius", "30")
    assert code == 3


def test_dot_output(capsys):
    code, out, _ = run(capsys, "irreducible", "--frobenius", "11", "--dot")
    assert code == 0
    assert out.startswith("digraph tree {")
    assert '"<6,7,8,9,10>" -> "<3,7>" [label="8"];' in out
    assert out.rstrip().endswith("}")


def test_dot_rejected_for_non_tree_mode(capsys):
    code, _, err = run(capsys, "as-ascending", "--frobenius", "11", "--dot")
    assert code == 2


def test_min_type(capsys):
    code, out, _ = run(capsys, "as-descending", "--frobenius", "11",
                       "--min-type", "7")
    assert code == 0
    records = [json.loads(l) for l in out.strip().splitlines()]
    assert all(r["type"] >= 7 for r in records)
    assert sum(1 for r in records if r["type"] == 7) == 2


def test_bench(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "bench", "--frobenius-list", "11",
                       "--algorithms", "ascending,descending,oracle",
                       "--out", str(report_path))
    assert code == 0
    assert out.startswith("Frobenius(S)")
    report = json.loads(report_path.read_text())
    rows = report["rows"]
    assert len(rows) == 3
    assert len({r["count"] for r in rows}) == 1
    assert "machine" in report["metadata"]


def test_bench_empty_list(capsys):
    code, _, err = run(capsys, "bench", "--frobenius-list", "")
    assert code == 2


def test_determinism_across_threads(capsys):
    outputs = []
    for threads in ("1", "8"):
        for cmd in (["irreducible", "--frobenius", "18"],
                    ["as-ascending", "--frobenius", "18"],
                    ["as-descending", "--frobenius", "18"],
                    ["oracle", "--frobenius", "14"]):
            code, out, _ = run(capsys, *cmd, "--threads", threads)
            assert code == 0
            outputs.append(out)
    half = len(outputs) // 2
    assert outputs[:half] == outputs[half:]
