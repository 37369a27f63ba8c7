import io
import json
import subprocess
import sys

import pytest

from hodgering.cli import main

CP2 = {"dimension": 2, "hodge": [[0, 0, 1], [1, 1, 1], [2, 2, 1]]}
SIGMA4 = {"dimension": 2, "modulus": 4, "hodge_coefficients": [[0, 0, 2], [1, 0, -2], [1, 1, -1], [2, 0, 2]]}


def run(monkeypatch, capsys, argv, payload=None):
    if payload is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(payload if isinstance(payload, str) else json.dumps(payload)))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ranks(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["ranks", "--max-degree", "2"])
    assert code == 0
    assert json.loads(out) == {"max_degree": 2, "H": [1, 2, 4], "P": [1, 1, 2], "Hir": [1, 1, 2], "CH": [1, 2, 4]}


def test_decompose_bases(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--basis", "abc"], CP2)
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"] == {"A^2": 1, "C": -1} and doc["polynomial"] == "A^2 - C"
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--basis", "els"], CP2)
    assert json.loads(out)["coefficients"] == {"S": 1}
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--basis", "wxyz"], {"dimension": 4, "betti": [1, 0, 0, 0, 1]})
    assert json.loads(out)["coefficients"] == {"W^4": 1, "W*Y": -4, "Z": 2}
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--basis", "lecp2"], {"dimension": 4, "betti": [1, 2, 2, 2, 1]})
    assert json.loads(out)["coefficients"] == {"L*E": 1}


def test_decompose_from_file(monkeypatch, capsys, tmp_path):
    path = tmp_path / "cp2.json"
    path.write_text(json.dumps(CP2))
    code, out, _ = run(monkeypatch, capsys, ["decompose", "--basis", "abc", "-i", str(path)])
    assert code == 0 and json.loads(out)["dimension"] == 2


def test_classify_signature_mod_4(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["classify"], SIGMA4)
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "hodge" and doc["modulus"] == 4
    assert doc["verdicts"]["oriented_topological"]["verdict"] == "yes"
    assert doc["verdicts"]["unoriented_topological"]["verdict"] == "yes"


def test_classify_mixed(monkeypatch, capsys):
    payload = {"dimension": 2, "modulus": "rational", "chern_coefficients": [{"partition": [1, 1], "coeff": "1/2"}]}
    code, out, _ = run(monkeypatch, capsys, ["classify"], payload)
    doc = json.loads(out)
    assert code == 0 and doc["modulus"] == "rational"
    assert doc["verdicts"]["oriented_topological"]["verdict"] == "yes"


@pytest.mark.parametrize("argv,payload,kind", [
    (["classify"], "{not json", "InputError"),
    (["classify"], {"dimension": 2, "hodge_coefficients": [[0, 1, 1]]}, "InputError"),
    (["classify"], {"dimension": 2, "modulus": 0, "chern_coefficients": [{"partition": [2], "coeff": 1}]},
     "UnsupportedModeError"),
    (["decompose", "--basis", "abc"], {"dimension": 2, "hodge": [[0, 1, 1]]}, "ValidationError"),
    (["decompose", "--basis", "wxyz"], {"dimension": 2, "betti": [1, 1, 1]}, "ValidationError"),
    (["decompose", "--basis", "lecp2"], {"dimension": 4, "betti": [1, 1, 2, 1, 1]}, "InputError"),
])
def test_invalid_input_exit_code(monkeypatch, capsys, argv, payload, kind):
    code, out, err = run(monkeypatch, capsys, argv, payload)
    assert code == 1
    assert json.loads(out)["error"]["type"] == kind
    assert err.startswith("hodgering:")


def test_degree_cap(monkeypatch, capsys):
    monkeypatch.setenv("HODGERING_MAX_DEGREE", "3")
    code, out, _ = run(monkeypatch, capsys, ["ranks", "--max-degree", "4"])
    assert code == 1 and "HODGERING_MAX_DEGREE" in json.loads(out)["error"]["message"]
    code, _, _ = run(monkeypatch, capsys, ["ranks", "--max-degree", "3"])
    assert code == 0


def test_verify_small(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["verify", "--max-degree", "4", "--samples", "5"])
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert {r["tag"] for r in doc["results"]} >= {"abc_isomorphism", "kernel_f_is_G", "classifier_regressions"}


def test_byte_identical_output_in_subprocess(tmp_path):
    path = tmp_path / "sigma.json"
    path.write_text(json.dumps(SIGMA4))
    cmd = [sys.executable, "-m", "hodgering", "classify", "-i", str(path)]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout.strip()
    bad = subprocess.run([sys.executable, "-m", "hodgering", "classify", "-i", str(tmp_path / "missing.json")],
                         capture_output=True, text=True)
    assert bad.returncode == 1 and json.loads(bad.stdout)["error"]["type"] == "InputError"
