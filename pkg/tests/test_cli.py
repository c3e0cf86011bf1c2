import json

import pytest

from plovlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_matrix_examples(capsys):
    code, out = run_cli(capsys, "reproduce", "matrix-examples", "--deterministic")
    assert code == 0
    report = json.loads(out)
    assert report["pass"]
    assert report["results"]["A_5_3_6"]["match"]
    assert report["results"]["A_5_3_7"]["match"]
    assert "duration_seconds" not in report


def test_table1(capsys):
    code, out = run_cli(capsys, "reproduce", "table1")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["shape"] == [16, 18]
    assert report["results"]["top_right_zero"]
    assert report["results"]["sub_block_A536"]
    assert report["results"]["sub_block_A537"]


def test_table2_small(capsys):
    code, out = run_cli(capsys, "reproduce", "table2", "--dmax", "5")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["cells"]["4,0"] == {
        "nullity": 2, "expected": 2, "match": True}
    assert report["results"]["cells"]["5,0"]["nullity"] == 3


def test_table2_csv(capsys):
    code, out = run_cli(capsys, "reproduce", "table2", "--dmax", "4",
                        "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "d,e,nullity,expected,match"
    assert lines[1] == "4,0,2,2,True"


def test_table2_truncate(capsys):
    code, out = run_cli(capsys, "reproduce", "table2",
                        "--truncate", "2,1,1", "--n", "6")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["nullity"] == 2
    assert main(["reproduce", "table2", "--truncate", "1,0,1"]) == 2
    assert main(["reproduce", "table2", "--truncate", "1,1,1", "--n", "2"]) == 2


def test_table2_extended_gate(capsys):
    code = main(["reproduce", "table2", "--dmax", "8"])
    assert code == 2


def test_kernel(capsys):
    code, out = run_cli(capsys, "reproduce", "kernel", "--d", "2")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["nullity"] == 1
    assert report["results"]["kernel"] == ["1", "-1"]


def test_kernel_usage(capsys):
    assert main(["reproduce", "kernel", "--d", "99"]) == 2


def test_fullrank_single(capsys):
    code, out = run_cli(capsys, "reproduce", "fullrank",
                        "--k", "5", "--d", "3", "--n", "6")
    assert code == 0
    assert json.loads(out)["results"]["instances"] == 1


def test_fullrank_usage(capsys):
    assert main(["reproduce", "fullrank", "--k", "5", "--d", "3", "--n", "99"]) == 2
    assert main(["reproduce", "fullrank", "--k", "5"]) == 2


def test_plov_blocks(capsys):
    code, out = run_cli(capsys, "plov", "--abelian-blocks", "2,1,1")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["plov"] == 6
    assert report["results"]["k"] == 2


def test_plov_identity(capsys):
    code, out = run_cli(capsys, "plov", "--abelian-blocks", "1,1,1,1")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["plov"] == 4
    assert report["results"]["k"] == 0


def test_plov_model_file(capsys, tmp_path):
    path = tmp_path / "model.json"
    path.write_text('{"type": "abelian", "g": 2, "A": [[1, 1], [0, 1]]}')
    code, out = run_cli(capsys, "plov", "--model", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["results"]["plov"] == 4


def test_plov_entropy_rejected(capsys, tmp_path):
    path = tmp_path / "model.json"
    path.write_text('{"type": "abelian", "g": 2, "A": [[2, 1], [1, 1]]}')
    assert main(["plov", "--model", str(path)]) == 1


def test_plov_usage(capsys):
    assert main(["plov"]) == 2
    assert main(["plov", "--abelian-blocks", "2", "--model", "x.json"]) == 2
    assert main(["plov", "--model", "/nonexistent/path.json"]) == 2


def test_scan_deterministic(capsys):
    code, out1 = run_cli(capsys, "scan", "--d", "3", "--count", "4",
                         "--seed", "9", "--deterministic")
    assert code == 0
    code, out2 = run_cli(capsys, "scan", "--d", "3", "--count", "4",
                         "--seed", "9", "--deterministic")
    assert code == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["results"]["passed"] == 4
    assert set(report["results"]["observed_plov"]) <= {3, 5, 9}


def test_scan_gap_d3(capsys):
    code, out = run_cli(capsys, "scan", "--d", "3", "--count", "12", "--seed", "1")
    assert code == 0
    report = json.loads(out)
    for p in report["results"]["observed_plov"]:
        assert not (5 < p < 9)


def test_scan_usage(capsys):
    assert main(["scan", "--d", "9"]) == 2
    assert main(["scan", "--d", "3", "--count", "0"]) == 2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code = main(["reproduce", "matrix-examples", "--out", str(path)])
    assert code == 0
    assert json.loads(path.read_text())["pass"]
