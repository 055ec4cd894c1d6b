import io
import json
import subprocess
import sys

import pytest

from qverify.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_eq3_passes():
    code, text = run("verify", "--identity", "eq3", "--qmax", "12", "--bmax", "12")
    assert code == 0
    data = json.loads(text)
    assert data["status"] == "pass"
    assert data["run"]["config"]["window"]["b_max"] == 12


def test_verify_eq1_constant_term():
    code, _ = run("verify", "--identity", "eq1", "--qmax", "0", "--amin", "-2", "--amax", "2", "--bmax", "2")
    assert code == 0


def test_verify_printed_eq5_fails_with_exit_one():
    code, text = run("verify", "--identity", "eq5-printed", "--qmax", "8", "--amax", "6", "--cmax", "8")
    assert code == 1
    check = json.loads(text)["checks"][0]
    assert check["expected"] == "fail"
    first = check["mismatches"][0]
    assert first == {"monomial": {"q": 0, "a": 0, "b": 0, "c": 0}, "lhs": 0, "rhs": 1}


def test_verify_tsv_dumps_the_difference():
    code, text = run("verify", "--identity", "eq5-printed", "--qmax", "2", "--amax", "2", "--cmax", "2", "--format", "tsv")
    assert code == 1
    # LHS - RHS is minus the product (1 + acq)(1 + acq^2)...
    assert text.splitlines() == ["0\t0\t0\t0\t-1", "1\t1\t0\t1\t-1", "2\t1\t0\t1\t-1"]


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--identity", "nope"),
        ("verify", "--identity", "eq1", "--qmax", "12"),
        ("verify", "--identity", "eq3", "--amin", "2", "--amax", "1"),
        ("trace", "phi-inverse", "--x", "3", "--y", "3", "--tag", "a1"),
        ("trace", "psi", "--lambda", "2", "--mu", "", "--gamma", ""),
        ("diagram", "--partition", "1,2"),
        ("audit-involution", "--weight", "-1"),
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_trace_psi_case_two():
    code, text = run("trace", "psi", "--lambda", "2,1", "--mu", "3,1", "--gamma", "2")
    assert code == 0
    assert "case 2" in text
    assert "output: lambda=(1) mu=(1) gamma=(5,2)" in text


def test_trace_psi_fixed_point():
    code, text = run("trace", "psi", "--lambda", "", "--mu", "2", "--gamma", "1")
    assert "case 1: fixed point" in text


def test_trace_phi_figure_two():
    code, text = run("trace", "phi", "--lambda", "6,5,4,3,2,1", "--mu", "8,8,0")
    assert code == 0
    assert "k = min(6, 3) = 3" in text
    assert "lambda+mu = (14,13,4,3,2,1)" in text
    assert "output: X=(14,13,4) Y=(3,2,1) tag A2" in text


def test_trace_phi_inverse_figure_one():
    code, text = run("trace", "phi-inverse", "--x", "14,11,10,9,6,5", "--y", "4,3,3,0,0,0,0,0", "--tag", "a1")
    assert "output: lambda=(6,5,4,3,2,1) mu=(8,6,6,6,4,4,4,3,3,0,0,0,0,0)" in text


def test_diagram_commands():
    code, text = run("diagram", "--figure", "1")
    assert code == 0 and text.endswith("tag A1\n")
    code, text = run("diagram", "--partition", "3,1")
    assert text.splitlines()[1:] == ["███", "█"]


def test_list_identities():
    code, text = run("list-identities", "--format", "json")
    rows = json.loads(text)
    assert len(rows) == 11
    assert {r["id"] for r in rows if not r["holds"]} == {"eq5-printed"}


def test_every_listed_identity_runs_on_its_minimal_window():
    _, text = run("list-identities", "--format", "json")
    for row in json.loads(text):
        w = row["minimal_window"]
        argv = ["verify", "--identity", row["id"]]
        for key, flag in (("q_max", "--qmax"), ("a_min", "--amin"), ("a_max", "--amax"),
                          ("b_max", "--bmax"), ("c_max", "--cmax")):
            if key in w:
                argv += [flag, str(w[key])]
        code, _ = run(*argv)
        assert code == (0 if row["holds"] else 1), row["id"]


def test_audit_and_classic_commands():
    assert run("audit-bijection", "--weight", "5", "--length-cap", "5")[0] == 0
    assert run("classic-check", "--weight", "5", "--length-cap", "3", "--format", "text")[0] == 0
    code, text = run("audit-involution", "--weight", "4", "--max-counterexamples", "1")
    assert code == 1
    data = json.loads(text)
    assert data["run"]["config"]["max_counterexamples"] == 1
    assert all(len(c.get("counterexamples", c.get("mismatches", []))) <= 1 for c in data["checks"])
    assert data["totals"]["unexpected"] == 0


def test_derive_command():
    code, _ = run("derive", "--chain", "rewrite", "--qmax", "4", "--amax", "3", "--cmax", "4")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qverify", "verify", "--identity", "eq3", "--qmax", "4", "--bmax", "4", "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("verify: PASS")
