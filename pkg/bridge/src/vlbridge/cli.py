"""Command-line interface for vlbridge.

``vlbridge solve FILE --expected V [--doubled]`` computes the volume of one
export file; ``vlbridge verify MANIFEST [--report DIR]`` runs a whole export
batch and writes ``report/volumes.tsv``.  Exit status is 0 on success, 1 when
any entry fails its tolerance or a solve errors out.
"""

from __future__ import annotations

import argparse
import sys

from virtlink import complement

from .engine import NON_HYPERBOLIC, UNKNOWN
from .verify import verify_volumes, volume_of_export


def _fmt(v) -> str:
    return f"{v:.12g}" if isinstance(v, float) else str(v)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="vlbridge",
                                 description="Verify hyperbolic volumes of "
                                             "virtlink exports.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="solve one export file")
    p.add_argument("file")
    p.add_argument("--expected", type=str, default=None,
                   help="expected volume (float) or NH")
    p.add_argument("--doubled", action="store_true",
                   help="halve the engine volume before reporting")

    p = sub.add_parser("verify", help="verify a whole export batch")
    p.add_argument("manifest")
    p.add_argument("--report", default="report", help="report directory")

    args = ap.parse_args(argv)
    try:
        if args.cmd == "solve":
            if args.expected is None:
                expected = float("nan")
            else:
                expected = (NON_HYPERBOLIC if args.expected == "NH"
                            else float(args.expected))
            r = volume_of_export(args.file, expected, args.doubled)
            rel = f"{r.relative_error:.3e}" if r.relative_error is not None else "-"
            print(f"{r.name}\t{_fmt(r.computed_volume)}\t{rel}")
            if r.computed_volume == UNKNOWN:
                return 1
            return 0
        results = verify_volumes(args.manifest, report_dir=args.report)
        bad = [r for r in results if r.status != "ok"]
        rels = [r.relative_error for r in results if r.relative_error is not None]
        print(f"{len(results)} entries, {len(bad)} failures, "
              f"max rel err {max(rels):.3e}" if rels else
              f"{len(results)} entries, {len(bad)} failures")
        for r in bad:
            print(f"  {r.name}: expected {_fmt(r.expected_volume)}, "
                  f"computed {_fmt(r.computed_volume)} [{r.status}]")
        return 1 if bad else 0
    except (complement.ComplementError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
