"""Unit tests for the vlbridge command-line interface."""

import subprocess
import sys

from virtlink import complement, gauss


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "vlbridge.cli", *args],
        capture_output=True, text=True,
    )


def test_solve_tri(tmp_path):
    code = gauss.parse("O1+O2+U1+U2+")
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    p = tmp_path / "2.1.tri"
    p.write_text(complement.export_triangulation(tri))
    r = run("solve", str(p), "--expected", "5.33348956690")
    assert r.returncode == 0
    assert "5.3334895669" in r.stdout


def test_verify_manifest(tmp_path):
    code = gauss.parse("O1+O2+U1+U2+")
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    (tmp_path / "2.1.tri").write_text(complement.export_triangulation(tri))
    m = tmp_path / "manifest.tsv"
    m.write_text(
        "name\tfile\texpected_volume\tdoubled\tgenus\n"
        "2.1\t2.1.tri\t5.33348956690\tfalse\t1\n"
    )
    r = run("verify", str(m), "--report", str(tmp_path / "report"))
    assert r.returncode == 0, r.stderr
    assert "0 failures" in r.stdout
    assert (tmp_path / "report" / "volumes.tsv").exists()


def test_missing_file_exits_nonzero(tmp_path):
    r = run("solve", str(tmp_path / "nope.tri"))
    assert r.returncode == 1
    assert r.stderr
