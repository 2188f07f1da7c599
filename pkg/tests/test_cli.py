import json
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import golden  # noqa: E402
from superhopf import cli, suites  # noqa: E402


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_mul_golden(capsys):
    code, out, _ = run(capsys, "mul", "M[3.,2]", "M[4.,1]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    got = {",".join(t["index"]): int(t["coeff"]) for t in data["terms"]}
    assert got == golden.PRODUCT


def test_mul_pretty_has_ten_terms(capsys):
    code, out, _ = run(capsys, "mul", "M[3.,2]", "M[4.,1]", "--format", "pretty")
    assert code == 0
    assert out.count("M[") == 10
    assert " - M[4.,4.,2]" in out


def test_antipode_golden(capsys):
    code, out, _ = run(capsys, "antipode", "M[1.,3,2.]")
    assert (code, out) == (0, golden.ANTIPODE_PRETTY)


def test_comul_json(capsys):
    code, out, _ = run(capsys, "comul", "M[2.,1,3.,4]", "--format", "json")
    assert code == 0
    data = json.loads(out)
    got = {(",".join(a), ",".join(b)): int(t["coeff"]) for t in data["terms"] for a, b in [t["index_pair"]]}
    assert got == golden.COPRODUCT


def test_comul_sym_legs(capsys):
    code, out, _ = run(capsys, "comul", "e[;2]")
    assert code == 0
    assert out == "e[;] ⊗ e[;2] + e[;1] ⊗ e[;1] + e[;2] ⊗ e[;]"
    code, out, _ = run(capsys, "comul", "h[1;]", "--legs", "h")
    assert out == "h[;] ⊗ h[1;] + h[0;] ⊗ h[;1] + h[;1] ⊗ h[0;] + h[1;] ⊗ h[;]"


def test_scalars(capsys):
    assert run(capsys, "pair", "H[2,1.]", "M[2,1.]")[:2] == (0, "1")
    assert run(capsys, "pair", "M[1.,2]", "H[2,1.]")[:2] == (0, "0")
    assert run(capsys, "hall", "p[;2,1]", "p[;2,1]")[:2] == (0, "2")


def test_convert_and_schur(capsys):
    assert run(capsys, "convert", "h[;2]", "--to", "p")[1] == "1/2*p[;2] + 1/2*p[;1,1]"
    assert run(capsys, "convert", ";2", "--from", "h", "--to", "m")[1] == "m[;2] + m[;1,1]"
    assert run(capsys, "schur", ";2,1")[1] == "m[;2,1] + 2*m[;1,1,1]"
    assert run(capsys, "lr", ";1", ";1")[1] == "s[;2] + s[;1,1]"
    assert run(capsys, "skew", "1;1", "1;1")[1] == "s[;]"


def test_omega(capsys):
    assert run(capsys, "omega", "p[;2]")[1] == "-p[;2]"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "superpartitions", "--n", "2", "--m", "1")
    assert code == 0 and set(out.split()) == {"2;", "1;1", "0;2", "0;1,1"}
    code, out, _ = run(capsys, "enumerate", "weak-coarsenings", "--index", "1.,1,2.,2,3.", "--format", "json")
    assert len(json.loads(out)["items"]) == 9


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "m[;1]", "--vars", "2")
    assert code == 0 and out == "1*x1 + 1*x2"
    # M_α with more parts than variables vanishes
    assert run(capsys, "oracle", "M[1,1,1]", "--vars", "2")[1] == "0"


def test_check_suite_ok(capsys):
    code, out, _ = run(capsys, "check", "--suite", "hopf-qsym", "--max-degree", "5")
    assert code == 0
    assert "FAIL" not in out


def test_exit_codes(capsys):
    assert run(capsys, "mul")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "omega", "M[1]")[0] == 1
    assert run(capsys, "mul", "M[1", "M[2]")[0] == 2
    assert run(capsys, "antipode", "m[3,3;]")[0] == 2
    assert run(capsys, "antipode", "M[5,5]", "--max-degree", "6")[0] == 3
    assert run(capsys, "schur", ";4,3")[0] == 3
    assert run(capsys, "check", "--suite", "hopf-qsym", "--max-degree", "99")[0] == 3


def test_suite_failure_exit(capsys, monkeypatch):
    def broken(name, cfg):
        return [suites.Check("always fails", False, 1, "x", 0.0)]
    monkeypatch.setattr(suites, "run_suite", broken)
    code, out, _ = run(capsys, "check", "--suite", "hopf-qsym")
    assert code == 4
    assert "always fails" in out


def test_global_flags_either_side(capsys):
    a = run(capsys, "--format", "json", "antipode", "M[1.]")
    b = run(capsys, "antipode", "M[1.]", "--format", "json")
    assert a == b and json.loads(a[1])["terms"][0]["coeff"] == "-1"


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "superhopf.cli", "mul", "M[3.,2]", "M[4.,1]", "--format", "json"]
    outs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("expr", ["M[2.,1]", "H[1.,2]", "m[1;1]", "s[0;1]"])
def test_pretty_output_reparses(capsys, expr):
    code, pretty, _ = run(capsys, "antipode", expr)
    assert code == 0
    code, again, _ = run(capsys, "mul", pretty)
    assert (code, again) == (0, pretty)
