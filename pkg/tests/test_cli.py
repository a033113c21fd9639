import subprocess
import sys

import pytest

from symlattice.cli import main

SQUARE = """bottom: {}
elements: {} {1} {2} {1,2}
cover: {} {1}
cover: {} {2}
cover: {1} {1,2}
cover: {2} {1,2}
"""
DIAMOND = "bottom: 0\nelements: 0 a b c\ncover: 0 a\ncover: 0 b\ncover: a c\ncover: b c\n"
G2_CAPACITY = "n: 2\nscale: 1\n{} 0\n1 1\n2 1\n1,2 1\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rule_worked_sequence(capsys):
    seq = "3,3,3,2,1,0,-2,-3,-3"
    assert run(capsys, "rule", "--rule", "weak", "--seq", seq, "--scale", "3") == (
        0, "result: 1\ndeleted: 0,1,2,3,6,7,8\n", "")
    assert run(capsys, "rule", "--rule", "strong", "--seq", seq, "--scale", "3")[1].startswith("result: 3\n")
    assert run(capsys, "rule", "--rule", "pessimistic", "--seq", seq)[1].startswith("result: -3\n")


def test_rule_single_term(capsys):
    assert run(capsys, "rule", "--rule", "splitting", "--seq", "2", "--scale", "3")[:2] == (
        0, "result: 2\ndeleted:\n")


def test_rule_negative_first_value(capsys):
    assert run(capsys, "rule", "--rule", "weak", "--seq", "-3,3,1")[1] == "result: 1\ndeleted: 0,1\n"


@pytest.mark.parametrize("argv", [
    ["rule", "--rule", "weak", "--seq", "5", "--scale", "3"],
    ["rule", "--rule", "weak", "--seq", "1,x"],
    ["eval", "x | 1"],
])
def test_input_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_unknown_rule_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rule", "--rule", "median", "--seq", "1"])
    assert exc.value.code == 2


def test_eval(capsys):
    assert run(capsys, "eval", "(3 | -3) | 2")[1] == "2\n"
    assert run(capsys, "eval", "3 | (-3 | 2)")[1] == "0\n"
    assert run(capsys, "eval", "2 & -3", "--scale", "3")[1] == "-2\n"


def test_mobius_g2(capsys, files):
    code, out, _ = run(capsys, "mobius", "--poset", files("sq.poset", SQUARE),
                       "--function", files("g2.fn", "{} 0\n{1} 1\n{2} 1\n{1,2} 1\n"), "--rule", "splitting")
    assert code == 0 and out == "{} 0\n{1} 1\n{2} 1\n{1,2} 0\n"


def test_mobius_no_solution(capsys, files):
    code, out, _ = run(capsys, "mobius", "--poset", files("d.poset", DIAMOND),
                       "--function", files("g.fn", "0 0\na -1\nb -1\nc 1\n"), "--rule", "strong")
    assert code == 1 and out.endswith("no solution\n")


def test_mobius_singleton(capsys, files):
    code, out, _ = run(capsys, "mobius", "--poset", files("s.poset", "bottom: 0\nelements: 0\n"),
                       "--function", files("s.fn", "0 0\n"))
    assert (code, out) == (0, "0 0\n")


def test_mobius_warns_on_non_isotone_magnitude(capsys, files):
    code, out, _ = run(capsys, "mobius", "--poset", files("c.poset", "elements: 0 1\ncover: 0 1\n"),
                       "--function", files("c.fn", "0 2\n1 -1\n"))
    assert code == 1 and out.startswith("warning: |g| is not isotone\n")


def test_mobius_file_errors(capsys, files):
    assert run(capsys, "mobius", "--poset", "/nonexistent", "--function", "/nonexistent")[0] == 2
    code, _, err = run(capsys, "mobius", "--poset", files("d.poset", DIAMOND),
                       "--function", files("bad.fn", "0 0\na 1\n"))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "mobius", "--poset", files("d.poset", DIAMOND),
                     "--function", files("big.fn", "0 0\na 1\nb 1\nc 5\n"), "--scale", "3")
    assert code == 2


def test_primitive(capsys, files):
    code, out, _ = run(capsys, "primitive", "--poset", files("sq.poset", SQUARE),
                       "--function", files("m.fn", "{} 0\n{1} 1\n{2} 1\n{1,2} 0\n"), "--rule", "weak")
    assert (code, out) == (0, "{} 0\n{1} 1\n{2} 1\n{1,2} 1\n")


@pytest.mark.parametrize("flag", [[], ["--evenodd"]])
def test_capacity_mobius(capsys, files, flag):
    code, out, _ = run(capsys, "capacity-mobius", "--capacity", files("g2.cap", G2_CAPACITY), *flag)
    assert (code, out) == (0, "{} 0\n1 1\n2 1\n1,2 0\n")


def test_capacity_errors(capsys, files):
    code, _, err = run(capsys, "capacity-mobius", "--capacity", files("m.cap", "n: 2\nscale: 1\n{} 0\n1,2 1\n"))
    assert code == 2 and "1 2" in err
    code, _, _ = run(capsys, "capacity-mobius", "--capacity", files("x.cap", "n: 2\nscale: 1\n{} 0\n1 1\n2 0\n1,2 0\n"))
    assert code == 2


def test_sugeno(capsys, files):
    path = files("v.cap", "n: 2\nscale: 3\n{} 0\n1 1\n2 2\n1,2 3\n")
    assert run(capsys, "sugeno", "--capacity", path, "--profile", "2,2")[1] == "2\n"
    assert run(capsys, "sugeno", "--capacity", path, "--profile", "2,1")[1] == "1\n"
    assert run(capsys, "sugeno", "--capacity", path, "--profile", "-3,0", "--symmetric")[1] == "-1\n"
    assert run(capsys, "sugeno", "--capacity", path, "--profile", "-3,0")[0] == 2
    assert run(capsys, "sugeno", "--capacity", path, "--profile", "1")[0] == 2


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra")
    assert code == 0
    assert out.splitlines()[-1] == "passed: 18/18 checks"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "capacity")
    assert first == run(capsys, "verify", "--suite", "capacity")
    assert first[0] == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from symlattice import checks

    bad = checks.Check("always_fails")
    bad.record(False, "witness")
    monkeypatch.setitem(checks.SUITES, "algebra", lambda: [bad])
    code, out, _ = run(capsys, "verify", "--suite", "algebra")
    assert code == 1 and out.startswith("FAIL always_fails: 0/1")


def test_module_entry_point_and_help():
    proc = subprocess.run([sys.executable, "-m", "symlattice", "rule", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "--seq" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "symlattice", "rule", "--rule", "strong", "--seq", "-3,3,1"],
                          capture_output=True, text=True)
    assert proc.stdout == "result: 1\ndeleted: 0,1\n"
