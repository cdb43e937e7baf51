"""Volume verification of export batches against the bundled table.

`volume_of_export` solves one export file (triangulation or DT line) and
returns a `VolumeResult`; `verify_volumes` runs a whole manifest and writes
``report/volumes.tsv``.  For exports marked ``doubled`` the engine volume is
halved before comparison (the doubled manifold is two mirror copies of the
thickened-surface complement glued along totally geodesic boundary).
Solver failures are reported as ``Unknown`` — never silently as
``NonHyperbolic``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from virtlink import complement

from . import dt as dt_mod
from .engine import NON_HYPERBOLIC, UNKNOWN, Complex, geometrize

TOLERANCE = 1e-6  # relative


@dataclass(frozen=True)
class VolumeResult:
    name: str
    computed_volume: float | str  # volume, NON_HYPERBOLIC, or UNKNOWN
    expected_volume: float | str  # volume or NON_HYPERBOLIC
    doubled: bool
    relative_error: float | None

    @property
    def status(self) -> str:
        if isinstance(self.computed_volume, str):
            if self.computed_volume == UNKNOWN:
                return UNKNOWN
            return "ok" if self.computed_volume == self.expected_volume else "fail"
        if isinstance(self.expected_volume, str):
            return "fail"
        return "ok" if self.relative_error <= TOLERANCE else "fail"


def _solve_triangulation(path: Path, seeds=(1, 2, 3, 5, 7, 9), attempts=60) -> tuple:
    tri = complement.parse_triangulation(path.read_text(encoding="utf-8"))
    verdicts = []
    for seed in seeds:
        cx = Complex([(t.neighbors, t.perms) for t in tri.tets])
        if cx.cusp_count() != len(tri.cusp_labels):
            raise complement.ComplementError(
                f"{path}: engine cusp count {cx.cusp_count()} != export's "
                f"{len(tri.cusp_labels)}"
            )
        vol, verdict = geometrize(cx, seed=seed, attempts=attempts)
        if verdict == "hyperbolic":
            return vol, verdict, tri
        verdicts.append(verdict)
    # NonHyperbolic only if every attempt agreed; mixed signals stay Unknown
    verdict = NON_HYPERBOLIC if all(v == NON_HYPERBOLIC for v in verdicts) else UNKNOWN
    return None, verdict, tri


def volume_of_export(
    path: str | os.PathLike,
    expected: float | str,
    doubled: bool,
    name: str | None = None,
) -> VolumeResult:
    path = Path(path)
    name = name or path.stem
    if path.suffix == ".dt":
        line = path.read_text(encoding="utf-8").strip()
        for seed in (1, 2, 5):
            vol, verdict = dt_mod.dt_volume(line, seed=seed)
            if verdict != UNKNOWN:
                break
    else:
        vol, verdict, tri = _solve_triangulation(path)
        if doubled != tri.doubled:
            raise complement.ComplementError(
                f"{path}: manifest doubled flag disagrees with export metadata"
            )
    if vol is None:
        return VolumeResult(name, verdict, expected, doubled, None)
    if doubled:
        vol /= 2.0
    rel = (
        abs(vol - expected) / abs(expected)
        if isinstance(expected, float) and expected
        else None
    )
    return VolumeResult(name, vol, expected, doubled, rel)


def _fmt(v) -> str:
    return f"{v:.12g}" if isinstance(v, float) else str(v)


def verify_volumes(
    manifest_path: str | os.PathLike,
    report_dir: str | os.PathLike = "report",
) -> list[VolumeResult]:
    manifest_path = Path(manifest_path)
    base = manifest_path.parent
    rows = manifest_path.read_text(encoding="utf-8").splitlines()
    if not rows or rows[0].split("\t") != [
        "name", "file", "expected_volume", "doubled", "genus"
    ]:
        raise complement.ComplementError(f"{manifest_path}: malformed manifest header")
    results: list[VolumeResult] = []
    missing: list[str] = []
    for ln in rows[1:]:
        name, fname, expected_s, doubled_s, _genus = ln.split("\t")
        expected = NON_HYPERBOLIC if expected_s == "NH" else float(expected_s)
        doubled = doubled_s == "true"
        fpath = base / fname
        if fname.startswith("ERROR") or not fpath.exists():
            missing.append(name)
            results.append(VolumeResult(name, UNKNOWN, expected, doubled, None))
            continue
        results.append(volume_of_export(fpath, expected, doubled, name=name))
    report_dir = Path(report_dir)
    report_dir.mkdir(parents=True, exist_ok=True)
    out = ["name\texpected\tcomputed\trel_err\tstatus"]
    for r in results:
        rel = f"{r.relative_error:.3e}" if r.relative_error is not None else "-"
        out.append(
            f"{r.name}\t{_fmt(r.expected_volume)}\t{_fmt(r.computed_volume)}\t{rel}\t{r.status}"
        )
    (report_dir / "volumes.tsv").write_text("\n".join(out) + "\n", encoding="utf-8")
    return results
