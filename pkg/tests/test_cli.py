import json
import subprocess
import sys

import pytest

from chasles.cli import main

OCTAD = {"d": 3, "points": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [2, 0, 0], [0, 2, 0],
                            [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]]}
TRIANGLE = {"d": 2, "points": [[0, 0], [1, 1], [2, 1], [1, 2]]}
FIVE_POINT = {"d": 2, "points": [[0, 0], [1, 2], [3, 1], [1, 1], [2, 1]]}
CUBIC = {"d": 2, "points": [[i, j] for i in range(4) for j in range(4) if i + j <= 3]}


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)
    return _write


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(write, capsys):
    code, out, _ = run(["analyze", write("octad.json", OCTAD)], capsys)
    assert code == 0 and "Chasles: yes, N=7" in out
    code, out, _ = run(["analyze", write("five.json", FIVE_POINT)], capsys)
    assert code == 0 and "Chasles: no" in out
    code, out, _ = run(["analyze", "--json", write("tri.json", TRIANGLE)], capsys)
    data = json.loads(out)
    assert data["volume"] == 3 and data["interior"] == 1 and data["chasles"]


def test_analyze_rejects_bad_input(write, capsys):
    code, _, err = run(["analyze", write("empty.json", {"d": 2, "points": []})], capsys)
    assert code == 2 and "non-empty" in err
    code, _, err = run(["analyze", write("broken.json", '{"d": 2,\n "points": [')], capsys)
    assert code == 2 and "line 2" in err
    code, _, _ = run(["analyze", write("flat.json", {"d": 2, "points": [[0, 0], [1, 1], [2, 2]]})], capsys)
    assert code == 3


def test_extra_point_request(write, capsys):
    req = {"structure": TRIANGLE, "points": [["1", "2"], ["3", "1"]]}
    code, out, _ = run(["extra-point", write("req.json", req)], capsys)
    assert code == 0 and json.loads(out)["point"] == ["8/1", "-3/2"]
    code, out2, _ = run(["eliminant-point", write("req.json", req)], capsys)
    assert code == 0 and json.loads(out2)["point"] == ["8/1", "-3/2"]
    # byte-identical output on rerun
    assert run(["extra-point", write("req.json", req)], capsys)[1] == out


def test_extra_point_separate_files(write, capsys):
    pts = [["1", "2"], ["2", "5"], ["-1", "3"], ["4", "-1"], ["3", "3"], ["-2", "-2"], ["5", "1"], ["1/2", "7"]]
    code, out, _ = run(["extra-point", write("cubic.json", CUBIC), write("pts.json", pts)], capsys)
    assert code == 0
    assert json.loads(out)["certificates"] == ["0/1", "0/1"]


def test_extra_point_degenerate_input(write, capsys):
    pts = [["1", "1"], ["2", "2"], ["3", "3"], ["4", "4"], ["5", "5"], ["1", "7"], ["2", "9"], ["5", "-1"]]
    code, _, err = run(["extra-point", write("cubic.json", CUBIC), write("pts.json", pts)], capsys)
    assert code == 3 and "DegenerateInput" in err


def test_mixed_volume_and_family(write, capsys):
    structure = {"configurations": [TRIANGLE, CUBIC], "partition": [1, 1]}
    code, out, _ = run(["mixed-volume", write("s.json", structure)], capsys)
    # a generic line cuts the triangle curve in 3 points, so MV(P, 3 simplex) = 9
    assert code == 0 and int(out) == 9
    code, out, _ = run(["family", "3", "--json", "--trials", "3", "--seed", "1"], capsys)
    data = json.loads(out)
    assert data["mixed_volume"] == 8 and data["chasles"] and data["root_counts"]["seed"] == 1


def test_solve2d(write, capsys):
    f = {"d": 2, "terms": [{"exp": [3, 0], "coeff": "1"}, {"exp": [0, 0], "coeff": "-1"}]}
    g = {"d": 2, "terms": [{"exp": [0, 1], "coeff": "1"}, {"exp": [1, 0], "coeff": "-1"}]}
    code, out, _ = run(["solve2d", write("f.json", f), write("g.json", g)], capsys)
    data = json.loads(out)
    assert code == 0 and data["total_multiplicity"] == 3
    assert all({"coords", "mult", "residual"} <= set(r) for r in data["roots"])


def test_classify_to_file(tmp_path, capsys):
    out = tmp_path / "classes.json"
    code, _, _ = run(["classify", "--box", "4", "--max-vertices", "6", "--out", str(out)], capsys)
    data = json.loads(out.read_text())
    assert code == 0 and data["count"] == 16


def test_verify_paper_subset(capsys):
    code, out, _ = run(["verify-paper", "--only", "Rx", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and [c["name"] for c in data["checks"]] == ["Rx"]
    code, _, _ = run(["verify-paper", "--only", "no-such-check"], capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chasles", "family", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "mixed volume: 6" in proc.stdout
