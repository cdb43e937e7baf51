"""Unit tests for manifest-driven volume verification."""

import math

import pytest

from virtlink import complement, gauss
from vlbridge import verify_volumes, volume_of_export


def write_exports(tmp_path):
    code = gauss.parse("O1+O2+U1+U2+")  # virtual trefoil, genus 1
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    (tmp_path / "2.1.tri").write_text(complement.export_triangulation(tri))
    (tmp_path / "4.108.dt").write_text(
        complement.export_dt(gauss.parse("O1-U2+O3+U1-O4-U3+O2+U4-")) + "\n"
    )
    manifest = tmp_path / "manifest.tsv"
    manifest.write_text(
        "name\tfile\texpected_volume\tdoubled\tgenus\n"
        "2.1\t2.1.tri\t5.33348956690\tfalse\t1\n"
        "4.108\t4.108.dt\t2.02988321282\tfalse\t0\n"
        "9.9\tmissing.tri\t1.0\tfalse\t1\n"
    )
    return manifest


def test_volume_of_export_single(tmp_path):
    write_exports(tmp_path)
    r = volume_of_export(tmp_path / "2.1.tri", 5.33348956690, False)
    assert r.status == "ok"
    assert math.isclose(r.computed_volume, 5.33348956690, rel_tol=1e-9)
    assert r.relative_error < 1e-6


def test_doubled_flag_mismatch_rejected(tmp_path):
    write_exports(tmp_path)
    with pytest.raises(complement.ComplementError):
        volume_of_export(tmp_path / "2.1.tri", 5.33348956690, True)


def test_verify_volumes_report(tmp_path):
    manifest = write_exports(tmp_path)
    results = verify_volumes(manifest, report_dir=tmp_path / "report")
    by_name = {r.name: r for r in results}
    assert by_name["2.1"].status == "ok"
    assert by_name["4.108"].status == "ok"
    # missing files are listed, not fatal
    assert by_name["9.9"].computed_volume == "Unknown"
    report = (tmp_path / "report" / "volumes.tsv").read_text().splitlines()
    assert report[0] == "name\texpected\tcomputed\trel_err\tstatus"
    assert len(report) == 4


def test_malformed_manifest_rejected(tmp_path):
    bad = tmp_path / "manifest.tsv"
    bad.write_text("wrong\theader\n")
    with pytest.raises(complement.ComplementError):
        verify_volumes(bad, report_dir=tmp_path / "report")
