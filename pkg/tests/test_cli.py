import json

import pytest

from negaconv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_text(capsys):
    code, out, _ = run(capsys, "build", "--family", "I", "--q", "5", "--i", "2")
    assert code == 0 and out.strip() == "(26, 23, 2; 1, 6) over GF(25)"


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--family", "II", "--q", "3", "--i", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["dual"] == {"n": 5, "k": 3, "gamma": 2, "mu": 1, "d_f": 5}


def test_build_csv(capsys):
    code, out, _ = run(capsys, "build", "--family", "II", "--q", "3", "--i", "2", "--format", "csv")
    assert out.splitlines()[1].startswith("II,3,2,5,3,2,1,5,")


def test_build_bad_congruence(capsys):
    code, _, err = run(capsys, "build", "--family", "IV", "--q", "7", "--i", "2")
    assert code == 2 and "1 mod 4" in err


def test_verify_flagship(capsys):
    code, out, _ = run(capsys, "verify", "--family", "II", "--q", "3", "--i", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["state_search"]["value"] == 5 and rec["certificate"]["pass"]


def test_verify_quantum(capsys, tmp_path):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "verify", "--family", "IV", "--q", "5", "--i", "2", "--format", "json",
                       "--out", str(path))
    assert code == 0 and "[(26,20,1;2,6)]_5" in out
    assert json.loads(path.read_text())["quantum"]["mds"] is True


def test_verify_starved_budget_fails(capsys):
    code, out, _ = run(capsys, "verify", "--family", "IV", "--q", "5", "--i", "2", "--budget", "10")
    assert code == 1 and "skipped  dual-containment-matrix" in out


def test_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("NEGACONV_BUDGET", "10")
    code, _, _ = run(capsys, "verify", "--family", "IV", "--q", "5", "--i", "2")
    assert code == 1
    monkeypatch.setenv("NEGACONV_BUDGET", "lots")
    code, _, _ = run(capsys, "verify", "--family", "IV", "--q", "5", "--i", "2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [[], ["table", "--table", "3"], ["build", "--family", "I", "--q", "5", "--i", "2", "--seedless"],
     ["build", "--family", "VI", "--q", "5", "--i", "2"], ["build", "--family", "I", "--q", "x", "--i", "2"],
     ["verify", "--family", "I", "--q", "5", "--i", "2", "--budget", "0"]],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_deterministic(capsys):
    argv = ["verify", "--family", "III", "--q", "5", "--i", "2", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
