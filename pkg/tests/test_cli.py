import csv
import io
import json
import subprocess
import sys

import pytest

from dslq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def star4(tmp_path):
    f = tmp_path / "star4.txt"
    f.write_text("4 3\n0 1\n0 2\n0 3\n")
    return str(f)


def test_eta_text(capsys, star4):
    code, out, _ = run(capsys, "eta", "--edgelist", star4)
    assert code == 0 and out == "eta = 9.4641\n"


def test_precision(capsys, star4):
    _, out, _ = run(capsys, "eta", "--edgelist", star4, "--precision", "8")
    assert out == "eta = 9.46410162\n"
    code, _, _ = run(capsys, "eta", "--edgelist", star4, "--precision", "13")
    assert code == 2


def test_muf_reduced_fraction(capsys):
    code, out, _ = run(capsys, "muf", "--g6", "Dhc")  # C5
    assert code == 0 and out == "mu_f = 5/2\n"
    _, out, _ = run(capsys, "muf", "--g6", "Dhc", "--method", "brute")
    assert out.splitlines()[0] == "mu_f = 5/2"


def test_muf_brute_witness(capsys):
    _, out, _ = run(capsys, "muf", "--edgelist", "4 3/0 1/0 2/0 3", "--method", "brute", "--format", "json")
    rec = json.loads(out)
    assert rec == {"mu_f": "1", "method": "brute", "max_deficiency": 2, "witness": [0]}


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--g6", "Bw")
    assert code == 0 and out.splitlines()[0] == "has_factor = yes"
    _, out, _ = run(capsys, "factor", "--edgelist", "4 3/0 1/0 2/0 3")
    assert "has_factor = no" in out and "witness S = {0}" in out


def test_distance_and_spectrum(capsys):
    _, out, _ = run(capsys, "distance", "--edgelist", "3 2/0 1/1 2", "--format", "json")
    rec = json.loads(out)
    assert rec["distance"] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]] and rec["transmissions"] == [3, 2, 3]
    _, out, _ = run(capsys, "spectrum", "--g6", "Bw")
    assert out == "eigenvalues = 4.0000, 1.0000, 1.0000\n"


def test_quotient(capsys):
    _, out, _ = run(capsys, "quotient", "--edgelist", "4 3/0 1/0 2/0 3", "--partition", "0|1,2,3", "--format", "json")
    rec = json.loads(out)
    assert rec["quotient"] == [["3", "3"], ["1", "9"]] and rec["equitable"] is True
    assert rec["largest_eigenvalue"] == pytest.approx(9.4641, abs=1e-4)


def test_family_and_ghat(capsys):
    _, out, _ = run(capsys, "family", "--n", "5", "--s", "1", "--k", "1", "--format", "json")
    rec = json.loads(out)
    assert rec["quotient"] == [["7", "1", "4"], ["2", "4", "2"], ["4", "1", "9"]]
    assert (rec["n"], rec["m"]) == (5, 5)
    _, out, _ = run(capsys, "ghat", "--n", "5", "--format", "json")
    assert json.loads(out)["eta"] == pytest.approx(11.0)


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["n", "s", "eta_direct", "eta_quotient", "paper_value", "abs_diff"]
    assert {r["n"] for r in rows} == {str(n) for n in range(4, 37)}
    assert sum(r["s"] == "ghat" for r in rows) == 33
    assert all(float(r["abs_diff"]) <= 0.01 for r in rows)


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify-theorem2", "--n", "12")
    assert code == 0 and "verdict A_minimizer = pass" in out
    _, out, _ = run(capsys, "verify-theorem1", "--n", "10", "--k", "1", "--format", "json")
    rec = json.loads(out)
    assert rec["verdicts"]["B_ordering"] is None and rec["values"]["mu_f_extremal"] == "9/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["eta", "--g6", "Bw", "--format", "csv"],
        ["table1", "--n-min", "10", "--n-max", "12", "--format", "json"],
        ["verify-theorem2", "--n", "20"],
    ],
)
def test_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and first


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "eta", "--edgelist", "4 2/0 1/2 3")
    assert code == 1 and "vertices 0 and 2" in err
    code, _, err = run(capsys, "eta", "--edgelist", "3 1/0 0")
    assert code == 1 and "self-loop" in err
    code, _, _ = run(capsys, "family", "--n", "5", "--s", "3")
    assert code == 1


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "eta")[0] == 2
    assert run(capsys, "eta", "--g6", "Bw", "--edgelist", "1 0")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dslq", "eta", "--g6", "Bw"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "eta = 4.0000\n"
