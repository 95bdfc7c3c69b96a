"""Walkthrough of one algebra: Kupisch series (13,13,12,12,12).

Builds the algebra, reads off the resolution quiver, classifies the
Gorenstein projective modules, extracts the core parameters, and peels a
projective into its elementary filtration.  Run directly:

    python3 demos/worked_example.py
"""

from nakayama import (
    KupischSeries,
    ResolutionQuiver,
    core_profile,
    gorenstein_status,
    gp_modules,
    in_core,
    is_cm_free,
    peel_filtration,
)

alg = KupischSeries((13, 13, 12, 12, 12))
print(f"algebra: {alg}")
print(f"  {alg.s} simple modules, projective lengths {list(alg.p)}")
print(f"  {alg.num_modules()} indecomposable modules in total")

# The resolution quiver has one arrow x -> gamma(x) = x + p_x per vertex.
rq = ResolutionQuiver(alg)
print("\nresolution quiver:")
for x in range(1, alg.s + 1):
    print(f"  {x} -> {rq.gamma[x]}   ({rq.color(x)})")
print(f"  cycles: {rq.cycles}")
print(f"  cyclically black: {sorted(rq.cyclically_black)}")
print(f"  sources: {sorted(rq.sources)}")

# A module is Gorenstein projective exactly when its syzygy orbit is
# purely periodic; the black cycles read that off without any orbit walk.
gp = gp_modules(alg)
print(f"\n{len(gp)} non-projective Gorenstein projective modules:")
print("  " + "  ".join(repr(m) for m in sorted(gp)))

status = gorenstein_status(alg, rq)
print(f"\nGorenstein: {status.gorenstein} (decided by {status.method})")
print(f"CM-free: {is_cm_free(alg, rq)}")

# The core: modules filtered by the elementary modules E(x).
profile = core_profile(alg, rq)
print(f"\ncore: X = {sorted(profile.x_set)}, g = {profile.g}, p' = {profile.p_prime}")
for x, e in sorted(profile.elementaries.items()):
    print(f"  E({x}) = {e}  with factors "
          + ", ".join(f"S({alg.vertex(e.top + i)})" for i in range(e.length)))

census = [m for m in alg.modules() if in_core(alg, profile, m)]
print(f"  {len(census)} modules in the core (= g * p' = {profile.g * profile.p_prime})")

p1 = alg.projective(1)
parts = peel_filtration(alg, profile, p1)
print(f"\npeel {p1}: " + " | ".join(repr(e) for e in parts))
