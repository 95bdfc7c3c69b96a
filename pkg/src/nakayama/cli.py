"""Command-line surface: analyze one algebra, export quivers, sweep, verify.

Subcommands:

    analyze SERIES [--json|--text]   full report on one algebra
    rq SERIES [--dot]                resolution quiver as Graphviz DOT
    arq SERIES [--dot] [--mark-core] Auslander-Reiten quiver as DOT
    classify --s N [--csv]           classification table for s vertices
    verify [--s-max N] [--p-max P]   exhaustive property verification

SERIES is the comma-separated Kupisch series, e.g. 13,13,12,12,12.
Exit codes: 0 success, 1 verification found a property failure, 2 bad
usage or an invalid Kupisch series.  All output is deterministic: equal
inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .algebra import KupischError, KupischSeries
from .arquiver import build_ar, to_dot
from .core import core_profile, in_core
from .enumeration import classify
from .gorenstein import INFINITE, global_dimension, gorenstein_status, is_cm_free
from .resolution import ResolutionQuiver
from .verify import run_verification


def _parse_series(text: str) -> KupischSeries:
    parts = [part.strip() for part in text.split(",")]
    if not all(parts):
        raise KupischError(f"malformed series {text!r}: empty entry")
    try:
        lengths = [int(part) for part in parts]
    except ValueError:
        raise KupischError(f"malformed series {text!r}: entries must be integers")
    return KupischSeries(lengths)


# ----------------------------------------------------------------------
# analyze

def algebra_report(alg: KupischSeries) -> dict:
    """All verdicts on one algebra as a JSON-ready dict with fixed key order."""
    rq = ResolutionQuiver(alg)
    profile = core_profile(alg, rq)
    status = gorenstein_status(alg, rq)
    gl = global_dimension(alg)
    census = sum(1 for m in alg.modules() if in_core(alg, profile, m))
    s = alg.s
    return {
        "kupisch": list(alg.p),
        "s": s,
        "p": alg.pmin,
        "t": profile.t,
        "gorenstein": {
            "gorenstein": status.gorenstein,
            "v": status.v,
            "method": status.method,
        },
        "cm_free": is_cm_free(alg, rq),
        "global_dimension": "infinite" if gl == INFINITE else gl,
        "resolution_quiver": {
            "gamma": {str(x): rq.gamma[x] for x in range(1, s + 1)},
            "colors": {str(x): rq.color(x) for x in range(1, s + 1)},
            "cycles": [list(c) for c in rq.cycles],
            "sources": sorted(rq.sources),
        },
        "core": {
            "x_set": sorted(profile.x_set),
            "elementaries": [[x, e.length] for x, e in sorted(profile.elementaries.items())],
            "g": profile.g,
            "p_prime": profile.p_prime,
        },
        "counts": {
            "indecomposables": alg.num_modules(),
            "core_size": census,
        },
    }


def _cycle_color(cycle: list[int], colors: dict[str, str]) -> str:
    kinds = {colors[str(x)] for x in cycle}
    return kinds.pop() if len(kinds) == 1 else "mixed"


def format_report_text(report: dict) -> str:
    series = ",".join(str(v) for v in report["kupisch"])
    gor = report["gorenstein"]
    rqd = report["resolution_quiver"]
    core = report["core"]
    lines = [
        f"Kupisch series ({series})   s={report['s']}  p={report['p']}  t={report['t']}",
    ]
    if gor["gorenstein"]:
        lines.append(f"Gorenstein: yes, v = {gor['v']}   (method: {gor['method']})")
    else:
        lines.append(f"Gorenstein: no   (method: {gor['method']})")
    lines.append(f"CM-free: {'yes' if report['cm_free'] else 'no'}")
    lines.append(f"global dimension: {report['global_dimension']}")
    lines.append("resolution quiver:")
    lines.append("  gamma:  " + "  ".join(f"{x}->{rqd['gamma'][str(x)]}" for x in range(1, report["s"] + 1)))
    lines.append("  colors: " + "  ".join(f"{x}:{rqd['colors'][str(x)]}" for x in range(1, report["s"] + 1)))
    lines.append("  cycles: " + "; ".join(
        "(" + ",".join(str(v) for v in c) + ") " + _cycle_color(c, rqd["colors"])
        for c in rqd["cycles"]
    ))
    lines.append("  sources: {" + ",".join(str(v) for v in rqd["sources"]) + "}")
    lines.append("core:")
    lines.append("  X = {" + ",".join(str(v) for v in core["x_set"]) + "}")
    if core["elementaries"]:
        lines.append("  " + "  ".join(f"E({x}) = M({x},{l})" for x, l in core["elementaries"]))
    pp = core["p_prime"]
    lines.append(f"  g = {core['g']}   p' = {'none' if pp is None else pp}")
    counts = report["counts"]
    lines.append(f"counts: {counts['indecomposables']} indecomposables, {counts['core_size']} in core")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    alg = _parse_series(args.series)
    report = algebra_report(alg)
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(format_report_text(report))
    return 0


# ----------------------------------------------------------------------
# DOT exports

def rq_to_dot(rq: ResolutionQuiver) -> str:
    """Resolution quiver as DOT: black vertices filled, arrows from red
    vertices dotted."""
    s = rq.alg.s
    lines = ["digraph resolution_quiver {", "  node [shape=circle];"]
    for x in range(1, s + 1):
        attrs = f'label="{x}"'
        if x in rq.black:
            attrs += ", style=filled, fillcolor=black, fontcolor=white"
        lines.append(f"  v{x} [{attrs}];")
    for x in range(1, s + 1):
        style = ";" if x in rq.black else " [style=dotted];"
        lines.append(f"  v{x} -> v{rq.gamma[x]}{style}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_rq(args) -> int:
    alg = _parse_series(args.series)
    sys.stdout.write(rq_to_dot(ResolutionQuiver(alg)))
    return 0


def cmd_arq(args) -> int:
    alg = _parse_series(args.series)
    rq = ResolutionQuiver(alg)
    arq = build_ar(alg, core_profile(alg, rq))
    sys.stdout.write(to_dot(arq, mark_core=args.mark_core))
    return 0


# ----------------------------------------------------------------------
# classify

def classification_csv(s: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["roof", "residue", "kind", "g", "v", "t"])
    for row in classify(s):
        roof_label = "(" + ",".join(str(v) for v in row.roof) + ")"
        writer.writerow([roof_label, row.residue, row.kind, row.g,
                         "" if row.v is None else row.v, row.t])
    return buf.getvalue()


def cmd_classify(args) -> int:
    if not 1 <= args.s <= 8:
        sys.stderr.write(f"error: --s must be in 1..8, got {args.s}\n")
        return 2
    sys.stdout.write(classification_csv(args.s))
    return 0


# ----------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    if args.s_max < 1 or args.p_max < 2:
        sys.stderr.write("error: need --s-max >= 1 and --p-max >= 2\n")
        return 2
    result = run_verification(args.s_max, args.p_max)
    out = sys.stdout
    for name, st in result.suites.items():
        verdict = "ok  " if st.failures == 0 else "FAIL"
        out.write(f"{verdict} {name}: {st.checks} checks, {st.failures} failures\n")
    for msg in result.failures:
        out.write(f"FAIL {msg}\n")
    if result.failure_count > len(result.failures):
        out.write(f"... {result.failure_count - len(result.failures)} more failures\n")
    for note in result.flags:
        out.write(f"note: {note}\n")
    total_checks = sum(st.checks for st in result.suites.values())
    out.write(
        f"{'PASS' if result.ok else 'FAIL'}: {result.series_count} series, "
        f"{result.module_count} modules, {total_checks} checks, "
        f"{result.failure_count} failures ({result.elapsed:.1f}s, "
        f"oracle {result.oracle_elapsed:.1f}s)\n"
    )
    return 0 if result.ok else 1


# ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama",
        description="Gorenstein homological algebra of connected cyclic Nakayama algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report on one algebra")
    p_an.add_argument("series", help="comma-separated Kupisch series, e.g. 13,13,12,12,12")
    fmt = p_an.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report")
    fmt.add_argument("--text", action="store_true", help="plain-text report (default)")
    p_an.set_defaults(func=cmd_analyze)

    p_rq = sub.add_parser("rq", help="resolution quiver as DOT")
    p_rq.add_argument("series")
    p_rq.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p_rq.set_defaults(func=cmd_rq)

    p_arq = sub.add_parser("arq", help="Auslander-Reiten quiver as DOT")
    p_arq.add_argument("series")
    p_arq.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p_arq.add_argument("--mark-core", action="store_true",
                       help="mark the Gorenstein core (deleted rays/corays grayed)")
    p_arq.set_defaults(func=cmd_arq)

    p_cl = sub.add_parser("classify", help="classification table by roof and residue")
    p_cl.add_argument("--s", type=int, required=True, help="number of vertices, 1..8")
    p_cl.add_argument("--csv", action="store_true", help="CSV output (the only format)")
    p_cl.set_defaults(func=cmd_classify)

    p_ve = sub.add_parser("verify", help="run the exhaustive property suites")
    p_ve.add_argument("--s-max", type=int, default=5, dest="s_max")
    p_ve.add_argument("--p-max", type=int, default=12, dest="p_max")
    p_ve.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except KupischError as e:
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
