import csv
import io
import json
import subprocess
import sys

import pytest

from brahmagupta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_unit(capsys):
    code, out, _ = run(capsys, "unit", "29")
    assert code == 0
    assert json.loads(out) == {"d": 29, "a0": 5, "period": [2, 1, 1, 2, 10], "unit": {"x": "9801", "y": "1820"}}


def test_orbits_77(capsys):
    code, out, _ = run(capsys, "orbits", "77", "-13")
    assert code == 0
    payload = json.loads(out)
    assert payload["orbits"] == [
        {"x": "-8", "y": "1", "ambiguous": False, "conjugate_of": 1},
        {"x": "8", "y": "1", "ambiguous": False, "conjugate_of": 0},
    ]
    assert payload["bounds"] == {"u_max": "47", "v_max": "5"}


def test_orbits_empty(capsys):
    code, out, err = run(capsys, "orbits", "2", "3")
    assert code == 1
    assert out == ""
    assert "norm class empty" in err
    assert err.count("\n") == 1


@pytest.mark.parametrize("argv", [["unit", "16"], ["orbits", "9", "2"], ["orbits", "1", "2"], ["orbits", "2", "0"]])
def test_domain_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("brahmagupta:")


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["unit"], ["unit", "x"], ["seq", "2", "1"], ["seq", "2", "1", "-N", "0"], ["benford", "2", "1"],
     ["benford", "--from-file", "f", "-m", "4"], ["seq", "2", "1", "-N", "3", "--variant", "t5"], ["roots-check"]],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_seq_csv(capsys):
    code, out, _ = run(capsys, "seq", "77", "-13", "--orbit", "1", "--variant", "t1", "-N", "2")
    assert code == 0
    assert out == "n,x,y\n1,5888,671\n2,4133368,471041\n"


def test_seq_include_seeds_and_unit_power(capsys):
    _, out, _ = run(capsys, "seq", "2", "1", "-N", "2", "--include-seeds", "--unit-power", "2", "--variant", "t3")
    assert out == "n,x,y\n0,-1,0\n1,-17,-12\n2,-577,-408\n"


def test_seq_orbit_out_of_range(capsys):
    code, _, err = run(capsys, "seq", "77", "-13", "--orbit", "2", "-N", "2")
    assert code == 1
    assert "out of range" in err


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "77", "-13", "-N", "3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["m", "X", "Y"]
    assert len(rows) == 1 + 8 * 3
    assert [int(r[0]) for r in rows[1:]] == list(range(1, 25))
    assert all(int(x) ** 2 - 77 * int(y) ** 2 == -13 for _, x, y in rows[1:])


def test_big_terms_print(capsys):
    # terms here reach ~4600 digits, beyond the default int->str limit
    code, out, _ = run(capsys, "seq", "2", "1", "-N", "6000")
    assert code == 0
    last = out.strip().splitlines()[-1]
    assert len(last.split(",")[1]) > 4300


def test_benford_csv_layout(capsys):
    code, out, _ = run(capsys, "benford", "2", "1", "-N", "500", "--orbit", "0")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "pattern,count,frequency,expected,deviation"
    assert len(lines) == 1 + 9 + 2
    assert lines[10] == "N,max_abs_dev,chi_square,star_discrepancy"
    assert lines[11].startswith("500,")


def test_benford_json(capsys):
    code, out, _ = run(capsys, "benford", "77", "-13", "-N", "100", "-m", "2", "--format", "json", "--component", "y")
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == 800
    assert len(payload["rows"]) == 90
    assert payload["rows"][0]["pattern"] == "10"


def test_benford_round_trip(capsys, tmp_path):
    path = tmp_path / "seq.csv"
    assert main(["-o", str(path), "seq", "29", "140", "--orbit", "3", "--variant", "t2", "-N", "400"]) == 0
    capsys.readouterr()
    for component in ("x", "y"):
        _, fused, _ = run(capsys, "benford", "29", "140", "--orbit", "3", "--variant", "t2", "-N", "400",
                          "-m", "2", "--component", component)
        _, from_file, _ = run(capsys, "benford", "--from-file", str(path), "-m", "2", "--component", component)
        assert fused == from_file


def test_benford_round_trip_enumerate(capsys, tmp_path):
    path = tmp_path / "enum.csv"
    assert main(["-o", str(path), "enumerate", "77", "-13", "-N", "300"]) == 0
    _, fused, _ = run(capsys, "benford", "77", "-13", "-N", "300", "--format", "json")
    _, from_file, _ = run(capsys, "benford", "--from-file", str(path), "--format", "json")
    assert fused == from_file


def test_benford_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "benford", "--from-file", str(tmp_path / "nope.csv"))
    assert code == 1


def test_roots_check(capsys):
    code, out, _ = run(capsys, "roots-check", "29")
    assert code == 0
    assert json.loads(out) == {"unit": "9801+1820*sqrt(29)", "u": "9801", "ok": True}
    _, out, _ = run(capsys, "roots-check", "--unit", "2+1*sqrt(3)")
    assert json.loads(out)["ok"] is True
    code, _, _ = run(capsys, "roots-check", "--unit", "1+0*sqrt(3)")
    assert code == 1


def test_deterministic_output():
    cmd = [sys.executable, "-m", "brahmagupta", "benford", "29", "140", "-N", "50", "-m", "2"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.startswith(b"pattern,")
