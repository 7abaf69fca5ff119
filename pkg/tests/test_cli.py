import json
import shutil
import subprocess
import sys

import pytest

from gdc.cli import main
from gdc.idealfile import bundled_path

DATA = {name: str(bundled_path(name)) for name in ("patty", "es", "conca", "twisted-cubic", "minors-2x3")}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_minprimes_patty(capsys):
    code, out, _ = run(capsys, "minprimes", DATA["patty"])
    assert code == 0 and "(x,y)" in out and "(u,v)" in out


def test_cdim_projective_es(capsys):
    code, data = run_json(capsys, "cdim", "--proj", DATA["es"])
    assert code == 0 and data["projective_c"] == 0 and data["c"] == 1


def test_verify_inequality_on_prime_example(capsys):
    code, data = run_json(capsys, "verify-martina", "--weight-for", "lex", DATA["conca"])
    assert code == 0 and data["pass"] is True
    assert data["inputs"]["c_ideal"] == 3 and data["lhs"] == 2


def test_spec_paths_fall_back_to_bundled(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = run(capsys, "minprimes", "examples/patty.ideal")
    assert code == 0 and "(u,v)" in out and "bundled" in err


def test_text_and_json_agree(capsys):
    for argv in (["cdim", DATA["patty"]], ["weight-for", "--order", "lex", DATA["conca"]],
                 ["verify-ks", "--weight", "1,2,3,4", DATA["twisted-cubic"]]):
        _, data = run_json(capsys, *argv)
        _, text, _ = run(capsys, *argv)
        for key in ("c", "lhs", "rhs", "dim", "sdim"):
            if key in data:
                assert f"{key}: {data[key]}" in text
        if "omega" in data:
            assert "omega: [" + ", ".join(map(str, data["omega"])) + "]" in text


def test_other_commands(capsys):
    code, data = run_json(capsys, "gb", "--order", "lex", DATA["twisted-cubic"])
    assert code == 0 and len(data["basis"]) >= 3
    code, data = run_json(capsys, "lt", DATA["twisted-cubic"])
    assert code == 0 and "y^2" in data["generators"]
    code, data = run_json(capsys, "initial", "--weight", "1,1,1,1", DATA["twisted-cubic"])
    assert code == 0 and data["monomial"] is False
    code, data = run_json(capsys, "homogenize", "--weight", "1,0,0,0", DATA["twisted-cubic"])
    assert code == 0 and data["ring"][-1] == "t"
    code, data = run_json(capsys, "cm-check", "--order", "lex", DATA["conca"])
    assert code == 0 and data["witnesses"][0]["Q"] == "(x1,x3,x4,x5,x6)"
    code, data = run_json(capsys, "gin", "--seed", "3", DATA["twisted-cubic"])
    assert code == 0 and data["stable"] is True
    code, data = run_json(capsys, "verify-skinner", "--weight-for", "lex", DATA["conca"])
    assert code == 0 and data["pass"] is True


def test_verification_failure_exits_one(capsys):
    # declaring the reducible patty ideal prime claims c = 2, its initial ideal has c = 0
    code, data = run_json(capsys, "verify-martina", "--prime", "--weight", "1,1,1,1", DATA["patty"])
    assert code == 1 and data["pass"] is False and (data["lhs"], data["rhs"]) == (0, 1)


def test_strict_case_passes(capsys, tmp_path):
    ideal = tmp_path / "two.ideal"
    ideal.write_text("ring: x y\nchar: 0\ngens:\nx*y\n")
    code, data = run_json(capsys, "verify-martina", "--weight", "1,1", str(ideal))
    assert code == 0 and data["pass"] is True and data["strict_expected"] is True


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring: x y\nchar: 0\ngens:\nx + $y\n")
    code, _, err = run(capsys, "gb", str(bad))
    assert code == 2 and "line 4, column 5" in err
    code, _, err = run(capsys, "gb", str(tmp_path / "missing.ideal"))
    assert code == 2
    code, _, err = run(capsys, "gb", "--budget", "1", "--order", "lex", DATA["conca"])
    assert code == 2 and "budget" in err
    code, _, err = run(capsys, "initial", DATA["patty"])
    assert code == 2 and "--weight" in err
    code, _, err = run(capsys, "verify-ks", "--weight", "1,0,1,1", DATA["twisted-cubic"])
    assert code == 2
    code, _, err = run(capsys, "verify-skinner", "--weight", "1,1,1,1", DATA["twisted-cubic"])
    assert code == 2 and "complete intersection" in err
    code, _, err = run(capsys, "cdim", "--component", DATA["patty"], DATA["conca"])
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", DATA["patty"]])
    assert info.value.code == 2


def test_json_error_document(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring: x\nchar: 7\ngens:\nx\n")
    code, out, _ = run(capsys, "gb", str(bad), "--json")
    assert code == 2 and json.loads(out)["error"] == "ParseError"


def test_corrupted_bundle_aborts_reproduction(capsys, tmp_path):
    for path in DATA.values():
        shutil.copy(path, tmp_path)
    conca = tmp_path / "conca.ideal"
    lines = conca.read_text().split("\n")
    lines[3] = lines[3].replace("+", "+ *", 1)
    conca.write_text("\n".join(lines))
    code, _, err = run(capsys, "reproduce-paper", "--data-dir", str(tmp_path))
    assert code == 2 and "line 4" in err and "conca.ideal" in err


def test_console_entry_points():
    for cmd in (["gdc"], [sys.executable, "-m", "gdc"]):
        exe = shutil.which(cmd[0]) if cmd[0] == "gdc" else cmd[0]
        if exe is None:
            continue
        proc = subprocess.run([exe, *cmd[1:], "minprimes", "--json", DATA["patty"]],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert [c["prime"] for c in json.loads(proc.stdout)["components"]] == ["(x,y)", "(u,v)"]
