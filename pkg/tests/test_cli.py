"""Unit tests for the virtlink command-line interface."""

import json
import subprocess
import sys

VIRT_TREFOIL = "O1+O2+U1+U2+"


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "virtlink.cli", *args],
        input=stdin, capture_output=True, text=True,
    )


def test_genus():
    r = run("genus", VIRT_TREFOIL)
    assert r.returncode == 0
    assert r.stdout.strip() == "1"


def test_genus_json():
    r = run("--json", "genus", VIRT_TREFOIL)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["command"] == "genus"
    assert payload["result"] == 1


def test_stdin_dash():
    r = run("genus", "-", stdin=VIRT_TREFOIL + "\n")
    assert r.returncode == 0
    assert r.stdout.strip() == "1"


def test_faces_and_classical():
    assert run("faces", VIRT_TREFOIL).stdout.strip() == "2"
    assert run("classical", "O1+U2+O3+U1+O2+U3+").returncode == 0
    r = run("classical", VIRT_TREFOIL)
    assert r.returncode == 0
    assert "false" in r.stdout or "no" in r.stdout.lower()


def test_gen_polygonal():
    r = run("gen", "polygonal", "5")
    assert r.returncode == 0
    assert r.stdout.strip().count("O") == 5


def test_gen_kishino_with_choices():
    r = run("gen", "kishino", "2", "--choices", "0002,0112")
    assert r.returncode == 0
    out = r.stdout.strip()
    assert out.count("O") == 4


def test_bounds_json():
    r = run("--json", "bounds", VIRT_TREFOIL)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["command"] == "bounds"
    assert payload["genus"] == 1
    assert payload["lower_is_strict"] is True


def test_malformed_code_exits_one():
    r = run("genus", "O1+U2+")
    assert r.returncode == 1
    assert r.stderr


def test_bad_usage_exits_two():
    r = run("gen", "nosuchfamily", "3")
    assert r.returncode == 2


def test_export_tri_stdout():
    r = run("export-tri", VIRT_TREFOIL, "-o", "-")
    assert r.returncode == 0
    assert r.stdout.startswith("tri ")


def test_export_dt():
    r = run("export-dt", "O1+U2+O3+U1+O2+U3+")
    assert r.returncode == 0
    vals = [int(x) for x in r.stdout.split()]
    assert len(vals) == 3
