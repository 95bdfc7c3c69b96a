"""Classification of all connected cyclic Nakayama algebras at small s.

Every algebra reduces to a roof (constant shift to minimum 2) and the
residue of p mod s; the resolution quiver, and with it the whole
Gorenstein classification, only depends on that pair.  Run:

    python3 demos/classification_tables.py
"""

from nakayama import catalan, classify, count_linear_admissible, roofs

# The linear (non-cyclic) relatives are counted by Catalan numbers.
print("admissible ideals of the linear path algebra on s+1 vertices:")
for s in range(1, 7):
    n = count_linear_admissible(s)
    assert n == catalan(s)
    print(f"  s = {s}: {n}")

# Roof counts grow quickly; every roof spawns s classification rows.
print("\nroofs per s:")
for s in range(1, 6):
    print(f"  s = {s}: {len(roofs(s))} roofs, {len(classify(s))} classes")

# The full s = 3 table.  kind G: every cycle black (Gorenstein, with
# dimension v); F: no black cycle (CM-free with infinite global
# dimension unless also G); Mixed: both kinds of cycle.
print("\ns = 3 classification (roof, residue of p mod 3):")
print(f"  {'roof':<10} {'residue':>7} {'kind':<6} {'g':>2} {'v':>4} {'t':>2}")
for row in classify(3):
    label = "(" + ",".join(str(v) for v in row.roof) + ")"
    v = "-" if row.v is None else row.v
    print(f"  {label:<10} {row.residue:>7} {row.kind:<6} {row.g:>2} {v:>4} {row.t:>2}")
