import json

import pytest

from veronese.cli import main

P1 = '{"type": "semigroup", "generators": [[1, 0], [0, 1]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_secant_dims_json(capsys):
    code, out, _ = run(capsys, "secant-dims", "--ring", P1, "--r", "1", "--d", "2", "--tmax", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [x["ideal_dim"] for x in rows if x["m"] >= 1] == [0, 1, 3]


def test_secant_dims_polynomial_csv(capsys):
    code, out, _ = run(capsys, "secant-dims", "--ring", '{"type": "polynomial", "vars": 2}', "--r", "1", "--d", "2",
                       "--tmax", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,d,m,sym_dim,ideal_dim,quotient_dim"
    assert lines[-1] == "1,2,2,6,1,5"


def test_secant_dims_range_of_r(capsys):
    code, out, _ = run(capsys, "secant-dims", "--ring", P1, "--r", "1..2", "--d-range", "3..4", "--tmax", "3",
                       "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 2 * 2 * 4
    assert {(x["r"], x["d"], x["m"]): x["ideal_dim"] for x in rows}[(2, 4, 3)] == 1


def test_ring_file(tmp_path, capsys):
    f = tmp_path / "ring.json"
    f.write_text(P1)
    code, out, _ = run(capsys, "secant-dims", "--ring", str(f), "--r", "1", "--d", "3", "--tmax", "2")
    assert code == 0 and "Semigroup" in out


def test_betti_csv_and_cells(capsys):
    code, out, _ = run(capsys, "betti", "--ring", P1, "--r", "2", "--d", "4", "--imax", "2", "--tmax", "6",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "i,t,beta"
    nonzero = {tuple(map(int, l.split(",")[:2])) for l in lines[1:] if not l.endswith(",0")}
    assert nonzero == {(0, 0), (1, 3)}


def test_betti_json_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "betti", "--ring", P1, "--r", "1", "--d", "3", "--imax", "2", "--tmax", "4",
                       "--format", "json", "--jobs", "2")
    assert code == 0
    doc = json.loads(out)
    ring = tmp_path / "ring.json"
    ring.write_text(json.dumps(doc["ring"]))
    out_file = tmp_path / "again.json"
    code = main(["betti", "--ring", str(ring), "--r", "1", "--d", "3", "--imax", "2", "--tmax", "4",
                 "--format", "json", "--out", str(out_file)])
    assert code == 0
    assert json.loads(out_file.read_text()) == doc


def test_scan_bounds_json(capsys):
    code, out, _ = run(capsys, "scan-bounds", "--ring", P1, "--r", "1", "--i", "1", "--d-range", "2..6",
                       "--tmax", "4", "--format", "json", "--jobs", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "scan-bounds" and doc["constant"] is True
    assert [p["max_degree"] for p in doc["per_d"]] == [2] * 5
    assert [p["d"] for p in doc["per_d"]] == [2, 3, 4, 5, 6]


def test_scan_bounds_table(capsys):
    code, out, _ = run(capsys, "scan-bounds", "--ring", P1, "--r", "2", "--i", "1", "--d-range", "4..7", "--tmax", "4")
    assert code == 0 and "constant: 3" in out


def test_check_example(capsys):
    code, out, _ = run(capsys, "check-example")
    assert code == 0
    assert "I+ideal(f1) == I --false" in out
    assert "I+ideal(f1+f2+f3) == I --true" in out


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--suites", "associativity,homcount", "--format", "json", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == 7 and doc["ok"]
    assert [s["cases"] for s in doc["suites"]] == [1000, 768]


@pytest.mark.parametrize(
    "argv",
    [
        ["secant-dims", "--ring", P1, "--r", "0", "--d", "2", "--tmax", "3"],
        ["secant-dims", "--ring", "/no/such/file", "--r", "1", "--d", "2", "--tmax", "3"],
        ["secant-dims", "--ring", "{not json", "--r", "1", "--d", "2", "--tmax", "3"],
        ["secant-dims", "--ring", '{"type": "cubic"}', "--r", "1", "--d", "2", "--tmax", "3"],
        ["secant-dims", "--ring", P1, "--r", "1", "--tmax", "3"],
        ["secant-dims", "--ring", P1, "--r", "1", "--d", "2", "--d-range", "2..3", "--tmax", "3"],
        ["betti", "--ring", P1, "--r", "1", "--d-range", "2..3", "--imax", "1", "--tmax", "3"],
        ["scan-bounds", "--ring", P1, "--r", "1", "--d", "2", "--tmax", "3"],
        ["selftest", "--suites", "nope"],
        ["betti", "--ring", P1, "--r", "x", "--d", "2", "--imax", "1", "--tmax", "3"],
        ["no-such-command"],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_cost_guard(capsys):
    argv = ["betti", "--ring", '{"type": "polynomial", "vars": 4}', "--r", "1", "--d", "3", "--imax", "4", "--tmax", "9"]
    code, _, err = run(capsys, *argv)
    assert code == 3 and "rows" in err
    code, _, _ = run(capsys, *argv[:-2], "--tmax", "2", "--max-rows", "10")
    assert code == 3


def test_force_overrides_guard(capsys):
    code, out, _ = run(capsys, "betti", "--ring", P1, "--r", "1", "--d", "2", "--imax", "1", "--tmax", "3",
                       "--max-rows", "1", "--force")
    assert code == 0 and "Betti table" in out
