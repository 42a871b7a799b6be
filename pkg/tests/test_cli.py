import json

import jsonschema
import pytest

from adw.analysis import REPORT_SCHEMA
from adw.cli import CASES, main

F_SPEC = "vars 4\nnames a b c d\non 1 2 3 5 6 7 9 10 11 13\n"


@pytest.fixture
def spec(tmp_path):
    p = tmp_path / "F.spec"
    p.write_text(F_SPEC)
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_minimize(capsys, spec):
    code, out, _ = run(capsys, "minimize", spec)
    assert code == 0
    assert "a'c + b'c + c'd" in out
    assert "abc + c'd'" in out
    assert "T = [a(0) + b(0)]c(1) + c(0)d(1)" in out


def test_minimize_json_and_constant(capsys, tmp_path):
    p = tmp_path / "zero.spec"
    p.write_text("vars 2\non\n")
    code, out, _ = run(capsys, "minimize", p, "--format", "json")
    assert code == 0 and json.loads(out)["on"] == "0"


def test_minimize_malformed(capsys, tmp_path):
    p = tmp_path / "bad.spec"
    p.write_text("vars 2\non 1 banana\n")
    code, _, err = run(capsys, "minimize", p)
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "minimize", tmp_path / "missing.spec")
    assert code == 2


def test_dsop_commands(capsys):
    code, out, _ = run(capsys, "dsop", "check", "c(a+b)+dc'")
    assert code == 1 and "NOT-DSOP" in out and "ac and bc" in out
    code, out, _ = run(capsys, "dsop", "check", "ab'c+bc+dc'")
    assert code == 0 and out.strip() == "DSOP"
    code, out, _ = run(capsys, "dsop", "convert", "a+b")
    assert out.strip() == "a + a'b"
    code, out, _ = run(capsys, "dsop", "check", "[a(0)+b(0)]c(1)+c(0)d(1)")
    assert "a(0)c(1) and b(0)c(1)" in out


def test_synth_and_analyze(capsys, spec, tmp_path):
    net = tmp_path / "m1.net"
    code, _, err = run(capsys, "synth", spec, "--method", "method1", "-o", net)
    assert code == 0 and "fan-in 6" in err
    code, out, _ = run(capsys, "analyze", net, "--checks", "deadlock", "--codewords", "13")
    assert code == 1 and "DEADLOCK in rtz phase" in out

    dsop = tmp_path / "d.net"
    run(capsys, "synth", spec, "--method", "dsop", "-o", dsop)
    code, out, _ = run(capsys, "analyze", dsop, "--checks", "deadlock")
    assert code == 0 and "no findings" in out

    code, out, _ = run(capsys, "analyze", dsop, "--format", "json", "--codewords", "0,5")
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


def test_synth_stdout_and_conflicts(capsys, spec):
    code, out, err = run(capsys, "synth", spec, "--method", "dims", "--cd", "none")
    assert code == 0 and out.count("cgate") == 16
    code, _, err = run(capsys, "synth", spec, "--method", "dsop", "--cd", "nor")
    assert code == 2 and "method1" in err


def test_analyze_fig7_with_waves(capsys, tmp_path):
    net = tmp_path / "fig7.net"
    net.write_text("circuit fig7\ninput p:wire q:wire r:wire s:wire t:wire\noutput N:wire\n"
                   "gate m1 NAND p q r s -> net1\ngate inv1 INV net1 -> net2\ngate m2 NAND net2 t -> N\n")
    code, out, _ = run(capsys, "analyze", net, "--checks", "orphans", "--codewords", "31",
                       "--rtz-waves", "t;p,q,r,s")
    assert code == 1 and "GATE ORPHAN on net2" in out


def test_analyze_errors(capsys, tmp_path, spec):
    net = tmp_path / "d.net"
    run(capsys, "synth", spec, "-o", net)
    assert run(capsys, "analyze", net, "--checks", "nope")[0] == 2
    assert run(capsys, "analyze", net, "--codewords", "99")[0] == 2
    assert run(capsys, "analyze", net, "--codewords", "x")[0] == 2
    code, out, err = run(capsys, "analyze", net, "--limit-states", "100")
    assert code == 3 and "state limit" in err and "not a verdict" in out
    bad = tmp_path / "bad.net"
    bad.write_text("circuit b\ngate g1 XOR a b -> z\n")
    assert run(capsys, "analyze", bad)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


@pytest.mark.parametrize("case", sorted(CASES))
def test_reproduce_cases(capsys, case):
    code, out, _ = run(capsys, "reproduce", case)
    assert code == 0, out
    assert "expected finding reproduced" in out


def test_reproduce_quotes_snapshot(capsys):
    _, out, _ = run(capsys, "reproduce", "fig6-or")
    assert "cd1=0, cd2=0, cd3=0, cd4=0, or2=0, or1=1; D stuck at 1" in out
    _, out, _ = run(capsys, "reproduce", "fig7")
    assert "gate orphan on net2" in out


def test_reproduce_unknown(capsys):
    code, _, err = run(capsys, "reproduce", "fig99")
    assert code == 2 and "fig5-wire" in err
