"""Export the resolution quiver and Auslander-Reiten quiver as DOT.

Writes two Graphviz files for the worked example next to this script;
render them with `dot -Tsvg <file> -o <file>.svg` if Graphviz is
installed.  The same output is available from the command line:

    nakayama rq 13,13,12,12,12 --dot
    nakayama arq 13,13,12,12,12 --dot --mark-core

Run:

    python3 demos/quiver_export.py
"""

from pathlib import Path

from nakayama import (
    KupischSeries,
    ResolutionQuiver,
    build_ar,
    core_profile,
    rq_to_dot,
    to_dot,
)

here = Path(__file__).parent
alg = KupischSeries((13, 13, 12, 12, 12))
rq = ResolutionQuiver(alg)
profile = core_profile(alg, rq)
arq = build_ar(alg, profile)

rq_path = here / "resolution_quiver.dot"
rq_path.write_text(rq_to_dot(rq))
print(f"wrote {rq_path} ({alg.s} vertices; black vertices filled, "
      "arrows out of red vertices dotted)")

ar_path = here / "ar_quiver.dot"
ar_path.write_text(to_dot(arq, mark_core=True))
marks = list(arq.marks.values())
print(f"wrote {ar_path} ({len(arq.nodes)} nodes, {len(arq.arrows)} arrows)")
print(f"  core members highlighted: "
      f"{sum(1 for m in marks if m in ('core', 'elementary', 'core-projective'))} "
      f"(elementaries double-circled), "
      f"{sum(1 for m in marks if m.startswith('deleted'))} grayed out")
