"""Short algebras: what changes when p <= s.

Below the length threshold p > s the resolution-quiver shortcuts are no
longer valid, so Gorenstein status falls back to the syzygy oracle.  The
three algebras here show why the fallback is needed: black loops without
any Gorenstein projective module, finite global dimension, and a
non-Gorenstein algebra whose quiver looks harmless.  Run:

    python3 demos/edge_cases.py
"""

from nakayama import (
    INFINITE,
    KupischSeries,
    ResolutionQuiver,
    global_dimension,
    gorenstein_status,
    gp_modules,
    is_cm_free,
)


def show(series):
    alg = KupischSeries(series)
    rq = ResolutionQuiver(alg)
    status = gorenstein_status(alg, rq)
    gl = global_dimension(alg)
    cycles = "; ".join(
        "(" + ",".join(str(v) for v in c) + ")"
        + ("[black]" if all(x in rq.black for x in c) else
           "[red]" if not any(x in rq.black for x in c) else "[mixed]")
        for c in rq.cycles
    )
    print(f"{alg}   p = {alg.pmin} <= s = {alg.s}")
    print(f"  cycles: {cycles}")
    print(f"  Gorenstein: {status.gorenstein}"
          + (f", v = {status.v}" if status.gorenstein else "")
          + f"   (method: {status.method})")
    print(f"  CM-free: {is_cm_free(alg, rq)}")
    print(f"  global dimension: {'infinite' if gl == INFINITE else gl}")
    print(f"  Gorenstein projectives beyond the projectives: {len(gp_modules(alg))}")
    print()


# Gorenstein of dimension 2, CM-free, finite global dimension: the
# quiver has a single black loop yet no module is Gorenstein projective
# except the projectives themselves.
show((3, 2))

# Same phenomenon one vertex up: the red loop forces the oracle path.
show((4, 3, 2))

# One black and one red loop: not Gorenstein, still CM-free.  With
# p > s a black loop always carries Gorenstein projectives; here it
# carries none, which is exactly why p <= s needs the oracle.
show((3, 3, 2))
