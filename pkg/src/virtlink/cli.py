"""Command-line interface.

Every subcommand maps to one library operation (or one documented composite
pipeline).  Codes are given in the exact grammar of module `gauss`; the
argument ``-`` reads the code from standard input.  Output is line-oriented
text, or machine-readable JSON with ``--json`` (schema in
``docs/cli_schema.json``).  Exit codes: 0 success, 1 domain error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from . import complement
from . import families
from . import gauss as G
from . import prime as P
from . import surface
from . import tables


class _UsageError(Exception):
    pass


def _read_code(text: str) -> G.GaussCode:
    if text == "-":
        text = sys.stdin.read().strip()
    return G.parse(text)


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def _cmd_genus(args) -> dict:
    code = _read_code(args.code)
    g = surface.ribbon_genus(code)
    return {"result": g, "lines": [str(g)]}


def _cmd_faces(args) -> dict:
    code = _read_code(args.code)
    cx = surface.build_cell_complex(code)
    return {"result": cx.f, "lines": [str(cx.f)]}


def _cmd_classical(args) -> dict:
    code = _read_code(args.code)
    v = surface.is_classical(code)
    return {"result": v, "lines": ["true" if v else "false"]}


def _cmd_alternating(args) -> dict:
    code = _read_code(args.code)
    v = G.is_alternating(code)
    return {"result": v, "lines": ["true" if v else "false"]}


def _cmd_reduce(args) -> dict:
    code = _read_code(args.code)
    out = G.serialize(G.reduce(code))
    return {"result": out, "lines": [out]}


def _cmd_prime(args) -> dict:
    code = _read_code(args.code)
    res = P.primeness(code)
    payload = {"result": res.status.value, "basis": res.basis}
    lines = [f"{res.status.value} ({res.basis})"]
    if res.witness is not None:
        w = G.serialize(res.witness.witness_code)
        payload["witness"] = w
        lines.append(f"witness: {w}")
    return {**payload, "lines": lines}


def _cmd_gen(args) -> dict:
    if args.family == "polygonal":
        code = families.polygonal(args.n)
    else:
        choices = _parse_choices(args.n, args.choices)
        code = families.generalized_kishino(args.n, choices)
    out = G.serialize(code)
    return {"result": out, "lines": [out]}


def _parse_choices(n: int, spec: str | None) -> list[families.KishinoChoice]:
    if spec is None:
        base = list(families.KISHINO_455_CHOICES)
        return base + [families.KishinoChoice()] * (n - 2)
    out = []
    for word in spec.split(","):
        flags = word.strip()
        if len(flags) != 4 or any(ch not in "01" for ch in flags[:3]) or flags[3] not in "0123":
            raise _UsageError(
                f"bad choice {word!r}: want 4 characters switch_a switch_b reflect "
                "(each 0/1) and cut_point (0-3), e.g. 0102"
            )
        out.append(
            families.KishinoChoice(
                switch_a=flags[0] == "1",
                switch_b=flags[1] == "1",
                reflect=flags[2] == "1",
                cut_point=int(flags[3]),
            )
        )
    return out


def _cmd_append(args) -> dict:
    code = _read_code(args.code)
    choice = families.KishinoChoice(
        switch_a=args.switch_a,
        switch_b=args.switch_b,
        reflect=args.reflect,
        cut_point=args.cut_point,
    )
    out = G.serialize(families.half_kishino_append(code, args.gap, choice))
    return {"result": out, "lines": [out]}


def _cmd_one_virtual(args) -> dict:
    code = _read_code(args.code)
    out = G.serialize(families.one_virtual(code, args.id))
    return {"result": out, "lines": [out]}


def _cmd_bounds(args) -> dict:
    code = _read_code(args.code)
    win = bounds.volume_window_of_code(code)
    chk = bounds.euler_crossing_check(code)
    payload = {
        "lower": win.lower,
        "lower_is_strict": win.lower_is_strict,
        "upper": win.upper,
        "euler_crossing_holds": chk.holds,
        "genus": chk.g,
        "crossings": chk.c,
        "faces": chk.f,
    }
    lines = [
        f"window {'(' if win.lower_is_strict else '['}{win.lower:.12g}, {win.upper:.12g}]",
        f"euler-crossing c >= 2g-1: {'holds' if chk.holds else 'fails'} "
        f"(c={chk.c} g={chk.g} f={chk.f})",
    ]
    return {**payload, "lines": lines}


def _cmd_export_tri(args) -> dict:
    code = _read_code(args.code)
    d = complement.octahedral_decomposition(code, name=args.name)
    if d.genus >= 2:
        d = complement.double_decomposition(d)
    tri = complement.to_triangulation(d)
    text = complement.export_triangulation(tri)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    payload = {
        "file": args.output,
        "ntet": len(tri.tets),
        "cusps": len(tri.cusp_labels),
        "doubled": tri.doubled,
        "genus": tri.genus,
    }
    lines = [] if args.output == "-" else [
        f"wrote {args.output}: ntet={len(tri.tets)} cusps={len(tri.cusp_labels)} "
        f"doubled={'true' if tri.doubled else 'false'}"
    ]
    return {**payload, "lines": lines}


def _cmd_export_dt(args) -> dict:
    code = _read_code(args.code)
    out = complement.export_dt(code).strip()
    return {"result": out, "lines": [out]}


def _cmd_verify_table(args) -> dict:
    entries = tables.load_table(args.data)
    report = tables.verify_combinatorial(entries)
    lines = []
    n_fail = sum(1 for e in report.entries if not e.passed)
    if report.all_passed:
        lines.append(f"{len(entries)} entries, all combinatorial checks passed")
    else:
        lines.append(f"{len(entries)} entries, {n_fail} failed combinatorial checks")
        for e in report.entries:
            if not e.passed:
                lines.append(
                    f"FAIL {e.name}: genus={e.genus_ok} euler={e.euler_ok} "
                    f"window={e.window_ok} group={e.group_ok}"
                )
    for msg in report.errata:
        lines.append(f"erratum: {msg}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    payload = {
        "entries": len(entries),
        "failures": n_fail,
        "errata": list(report.errata),
        "passed": report.all_passed,
    }
    return {**payload, "lines": lines, "_exit": 0 if report.all_passed else 1}


def _cmd_export_batch(args) -> dict:
    entries = tables.load_table(args.data)
    manifest = tables.emit_export_batch(entries, args.output)
    errors = [ln for ln in manifest if "\tERROR" in ln]
    lines = [f"wrote {len(manifest) - 1} manifest rows to {args.output}"]
    lines += errors
    return {
        "rows": len(manifest) - 1,
        "errors": len(errors),
        "lines": lines,
        "_exit": 0 if not errors else 1,
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="virtlink", description=__doc__)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def code_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("code", help="Gauss code ('-' for stdin)")
        p.set_defaults(fn=fn)
        return p

    code_cmd("genus", _cmd_genus, "ribbon-surface genus of a code")
    code_cmd("faces", _cmd_faces, "face count of the code's cell complex")
    code_cmd("classical", _cmd_classical, "whether the code is classical (genus 0)")
    code_cmd("prime", _cmd_prime, "primeness decision with basis")
    code_cmd("alternating", _cmd_alternating, "whether the code alternates")
    code_cmd("reduce", _cmd_reduce, "remove nugatory crossings")

    pg = sub.add_parser("gen", help="generate a family member")
    pg.add_argument("family", choices=["polygonal", "kishino"])
    pg.add_argument("n", type=int)
    pg.add_argument("--choices", help="comma-separated unit choices, 4 chars each: "
                    "switch_a switch_b reflect (0/1) + cut_point (0-3)")
    pg.set_defaults(fn=_cmd_gen)

    pa = code_cmd("append", _cmd_append, "append one half-Kishino unit")
    pa.add_argument("--gap", type=int, required=True)
    pa.add_argument("--switch-a", dest="switch_a", action="store_true")
    pa.add_argument("--switch-b", dest="switch_b", action="store_true")
    pa.add_argument("--reflect", action="store_true")
    pa.add_argument("--cut-point", dest="cut_point", type=int, default=0)

    po = code_cmd("one-virtual", _cmd_one_virtual, "virtualize one crossing")
    po.add_argument("--id", type=int, required=True)

    code_cmd("bounds", _cmd_bounds, "volume window and crossing-genus check")

    pt = code_cmd("export-tri", _cmd_export_tri, "triangulation export (doubled for genus >= 2)")
    pt.add_argument("-o", "--output", required=True, help="output file ('-' for stdout)")
    pt.add_argument("--name", default="virtlink")

    code_cmd("export-dt", _cmd_export_dt, "DT export of a classical code")

    pv = sub.add_parser("verify-table", help="combinatorial checks over the bundled table")
    pv.add_argument("--data", help="table TSV (default: bundled, or $VIRTLINK_DATA)")
    pv.add_argument("--report", help="write the report to this file")
    pv.set_defaults(fn=_cmd_verify_table)

    pb = sub.add_parser("export-batch", help="write all table exports and the manifest")
    pb.add_argument("-o", "--output", required=True, help="output directory")
    pb.add_argument("--data", help="table TSV (default: bundled, or $VIRTLINK_DATA)")
    pb.set_defaults(fn=_cmd_export_batch)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        payload = args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (G.GaussCodeError, complement.ComplementError, families.FamilyError,
            tables.TableError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = payload.pop("lines", [])
    exit_code = payload.pop("_exit", 0)
    _emit({"command": args.cmd, **payload}, args.json, lines)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
