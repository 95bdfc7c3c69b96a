"""A family with Gorenstein dimension exactly 2s - 2.

The series (ms+1, ..., ms+1, ms) is Gorenstein for every s >= 2, m >= 1,
and its Gorenstein dimension attains the general upper bound 2s - 2.
The bound is witnessed by the primitive module H(1) of length s.  Run:

    python3 demos/gorenstein_family.py
"""

from nakayama import (
    KupischSeries,
    ResolutionQuiver,
    ZERO,
    g_dimension,
    gorenstein_status,
    gp_modules,
)

print(f"{'series':<28} {'v':>3} {'g-dim H(1)':>10}")
for s in (3, 4, 5, 6):
    for m in (2, 3):
        alg = KupischSeries((m * s + 1,) * (s - 1) + (m * s,))
        status = gorenstein_status(alg)
        h1 = alg.primitive(1)
        d = g_dimension(alg, h1)
        label = ",".join(str(v) for v in alg.p)
        print(f"({label})".ljust(28) + f" {status.v:>3} {d:>10}")
        assert status.gorenstein and status.v == d == 2 * s - 2

# Follow the witness orbit once, for s = 3, m = 2: each syzygy step of
# H(1) = M(1,3) walks one step closer to the black loop of the quiver.
alg = KupischSeries((7, 7, 6))
rq = ResolutionQuiver(alg)
gp = gp_modules(alg)
print(f"\nsyzygy orbit of H(1) over {alg} "
      f"(black cycle at {sorted(rq.cyclically_black)}):")
cur = alg.primitive(1)
step = 0
while True:
    tag = "GP" if (cur in gp or alg.is_projective(cur)) else f"dist {rq.dist[cur.top]}"
    print(f"  Omega_{step} = {cur}   top {cur.top}, {tag}")
    if cur in gp or alg.is_projective(cur):
        break
    nxt = alg.syzygy(cur)
    assert nxt is not ZERO
    cur = nxt
    step += 1
print(f"first Gorenstein projective syzygy at step {step} = 2s - 2")
