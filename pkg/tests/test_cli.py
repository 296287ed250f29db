import io
import json
import subprocess
import sys

import pytest

from mvkit.cli import main
from mvkit.io import fixture_path

EX33 = str(fixture_path("example_3_3.mvalg"))
EX44 = str(fixture_path("example_4_4.mvalg"))


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_validate(tmp_path):
    assert run("validate", EX33) == (0, "passed\n")
    bad = tmp_path / "bad.mvalg"
    bad.write_text(fixture_path("example_3_3.mvalg").read_text().replace("1 3 4 3 5 5", "1 4 4 3 5 5"))
    code, text = run("validate", str(bad))
    assert code == 1 and text.startswith("failed")


def test_center():
    assert run("center", EX33) == (0, "0 2 3 5\n")


def test_derive_map():
    code, text = run("derive", EX33, "--map", str(fixture_path("example_3_3_d.mvmap")))
    assert code == 0
    assert "is_additive            true" in text
    assert "fix                    0 2" in text and "kernel                 0 1 3" in text


def test_derive_enumerate():
    code, text = run("derive", EX44, "--kind", "implicative", "--enumerate")
    assert code == 0 and "1 1 3 3" in text.splitlines()


def test_decompose():
    code, text = run("decompose", EX33, "--element", "2")
    assert code == 0 and "T4.16        holds" in text


def test_decompose_rejects_non_central(capsys):
    code, _ = run("decompose", EX33, "--element", "1")
    assert code == 2 and "Boolean center" in capsys.readouterr().err


def test_iso(tmp_path):
    assert run("iso", EX44, EX44)[0] == 0
    assert run("iso", EX33, EX44) == (1, "no isomorphism\n")


def test_quotient():
    code, text = run("quotient", EX33, "--ideal", "0,1,3")
    assert code == 0 and "order 2" in text


def test_catalog(tmp_path):
    code, text = run("catalog", "--max-order", "4", "--out", str(tmp_path), "--cross-check")
    assert code == 0 and text.splitlines()[-1].split()[-1] == "holds"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["S2.mvalg", "S2xS2.mvalg", "S3.mvalg", "S4.mvalg"]


def test_audit_file_uses_stem(tmp_path):
    target = tmp_path / "out.jsonl"
    code, _ = run("audit", EX44, "--claim", "E4.8", "--format", "jsonl", "--out", str(target))
    assert code == 0
    lines = [json.loads(ln) for ln in target.read_text().splitlines()]
    assert len(lines) == 4 and {ln["algebra"] for ln in lines} == {"example_4_4"}
    assert {ln["verdict"] for ln in lines} == {"counterexample"}


def test_audit_needs_one_source(capsys):
    assert run("audit")[0] == 2
    assert run("audit", EX33, "--catalog", "3")[0] == 2


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "x.mvalg"
    bad.write_text("mvalg v1\norder 2\nneg 1\noplus\n0 1\n1 1\n")
    assert run("validate", str(bad))[0] == 2
    assert "line 3" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run("center", "/nonexistent.mvalg")[0] == 2


def test_console_script_determinism():
    cmd = [sys.executable, "-m", "mvkit.cli", "audit", "--catalog", "8", "--format", "jsonl"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") > 100
