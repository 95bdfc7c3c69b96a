"""Gorenstein projective modules and the homological verdicts built on them.

A non-projective indecomposable M is Gorenstein projective exactly when its
syzygy orbit is purely periodic and every projective cover met along that
cycle is minimal projective; equivalently (the fast criterion), when both
top M and top Omega(M) are cyclically black in the resolution quiver.  The
two tests are implemented independently: `is_gp_oracle` iterates syzygies
literally, `is_gp_fast` reads the resolution quiver.  Their agreement on
every module of every small algebra is part of the verification sweep.

On top of the per-module tests sit the algebra-level verdicts: G-dimension
per module, Gorenstein status with the Gorenstein dimension v, CM-freeness,
and global dimension.  The fast resolution-quiver criteria are only valid
for p > s; below that threshold every verdict falls back to syzygy orbits.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from .algebra import ZERO, KupischSeries, Mod, ModOrZero, ProjectiveInput
from .resolution import ResolutionQuiver

INFINITE = math.inf


class GorensteinStatus(NamedTuple):
    """Algebra-level Gorenstein verdict.

    v is the Gorenstein dimension (smallest bound with Omega_v(M) Gorenstein
    projective for every M), None when the algebra is not Gorenstein.
    method records which criterion decided: "resolution-quiver" (valid for
    p > s) or "syzygy-oracle" (p <= s).
    """

    gorenstein: bool
    v: Optional[int]
    method: str


def is_gp_fast(alg: KupischSeries, rq: ResolutionQuiver, m: Mod) -> bool:
    """Fast Gorenstein-projectivity test for a non-projective module.

    M(x, l) is Gorenstein projective iff both its top x and the top of its
    syzygy, x + l mod s, are cyclically black.
    """
    if alg.is_projective(m):
        raise ProjectiveInput(f"{m} is projective; the test concerns non-projectives")
    cb = rq.cyclically_black
    return m.top in cb and (m.top + m.length - 1) % alg.s + 1 in cb


def is_gp_oracle(alg: KupischSeries, m: Mod) -> bool:
    """Brute-force Gorenstein-projectivity test by literal syzygy iteration.

    Iterate Omega until the zero module or a repeated module shows up (the
    orbit lives in finitely many states, so this terminates).  M is
    Gorenstein projective iff the orbit returns to M itself and every
    projective cover met on the way is minimal projective; a non-minimal
    cover or a cycle that avoids M decides negatively at once.
    """
    p = alg.p
    s = alg.s
    minimal = alg._minimal
    x, length = m
    if length == p[x - 1]:
        raise ProjectiveInput(f"{m} is projective; the test concerns non-projectives")
    if not minimal[x - 1]:
        return False
    start = (x, length)
    seen = {start}
    while True:
        px = p[x - 1]
        if length == px:
            return False  # this state is projective, the next syzygy is zero
        x = (x + length - 1) % s + 1
        length = px - length
        if not minimal[x - 1]:
            return False
        cur = (x, length)
        if cur == start:
            return True
        if cur in seen:
            return False  # entered a cycle that does not pass through m
        seen.add(cur)


def gp_modules(alg: KupischSeries) -> frozenset[Mod]:
    """All non-projective Gorenstein projective indecomposables.

    One pass over the syzygy functional graph: collect the syzygy cycles and
    keep those whose members all have minimal projective covers.  This is
    is_gp_oracle evaluated for every module at once; the verification sweep
    asserts the equality per module.
    """
    p = alg.p
    s = alg.s
    minimal = alg._minimal
    ON_PATH, DONE = 1, 2
    status: dict[tuple[int, int], int] = {}
    gp: set[tuple[int, int]] = set()
    for x0 in range(1, s + 1):
        for l0 in range(1, p[x0 - 1] + 1):
            if (x0, l0) in status:
                continue
            path = []
            cur = (x0, l0)
            while True:
                st = status.get(cur)
                if st == DONE:
                    break
                if st == ON_PATH:
                    cyc = path[path.index(cur):]
                    if all(minimal[v[0] - 1] for v in cyc):
                        gp.update(cyc)
                    break
                status[cur] = ON_PATH
                path.append(cur)
                x, length = cur
                px = p[x - 1]
                if length == px:
                    break  # projective state: orbit continues to zero
                cur = ((x + length - 1) % s + 1, px - length)
            for v in path:
                status[v] = DONE
    return frozenset(Mod(x, length) for x, length in gp)


def g_dimension(alg: KupischSeries, m: ModOrZero, gp: frozenset[Mod] | None = None):
    """Smallest k with Omega_k(m) zero, projective, or Gorenstein projective.

    Returns INFINITE when no such k exists within 2*N + 2 syzygy steps
    (N = number of indecomposables); the orbit is confined to N states, so
    failure within that bound is conclusive, not heuristic.  The zero module
    has G-dimension 0 by convention.  Pass a precomputed gp_modules(alg) set
    to avoid recomputation in whole-algebra scans.
    """
    if m is ZERO:
        return 0
    if gp is None:
        gp = gp_modules(alg)
    bound = 2 * alg.num_modules() + 2
    cur = m
    for k in range(bound + 1):
        if cur is ZERO or alg.is_projective(cur) or cur in gp:
            return k
        cur = alg.syzygy(cur)
    return INFINITE


def projective_dimension(alg: KupischSeries, m: Mod):
    """Projective dimension of m by syzygy iteration; INFINITE on a cyclic orbit."""
    seen = set()
    cur = m
    k = 0
    while cur is not ZERO:
        if cur in seen:
            return INFINITE
        seen.add(cur)
        cur = alg.syzygy(cur)
        k += 1
    return k - 1


def global_dimension(alg: KupischSeries):
    """Max of the projective dimensions of the simple modules; may be INFINITE."""
    worst = 0
    for x in range(1, alg.s + 1):
        d = projective_dimension(alg, alg.simple(x))
        if d == INFINITE:
            return INFINITE
        if d > worst:
            worst = d
    return worst


def gorenstein_status(alg: KupischSeries, rq: ResolutionQuiver | None = None) -> GorensteinStatus:
    """Gorenstein verdict with Gorenstein dimension v.

    For p > s the resolution quiver decides: Gorenstein iff all cycles are
    black, and then v = 2 * (max distance to the black cycles).  For p <= s
    that criterion is invalid, so v is computed as the maximum G-dimension
    over all indecomposables; the algebra is Gorenstein iff that max is
    finite.
    """
    if alg.pmin > alg.s:
        if rq is None:
            rq = ResolutionQuiver(alg)
        d = rq.max_distance()
        if d is None:
            return GorensteinStatus(False, None, "resolution-quiver")
        return GorensteinStatus(True, 2 * d, "resolution-quiver")
    gp = gp_modules(alg)
    v = 0
    for m in alg.modules():
        k = g_dimension(alg, m, gp)
        if k == INFINITE:
            return GorensteinStatus(False, None, "syzygy-oracle")
        if k > v:
            v = k
    return GorensteinStatus(True, v, "syzygy-oracle")


def is_cm_free(alg: KupischSeries, rq: ResolutionQuiver | None = None) -> bool:
    """Is every Gorenstein projective module projective?

    For p > s: true iff every cycle of the resolution quiver contains a red
    vertex.  For p <= s the fast criterion is invalid (a black loop need not
    produce any Gorenstein projective module), so scan all non-projective
    indecomposables with the syzygy oracle.
    """
    if alg.pmin > alg.s:
        if rq is None:
            rq = ResolutionQuiver(alg)
        return all(any(x not in rq.black for x in c) for c in rq.cycles)
    return not any(
        is_gp_oracle(alg, m) for m in alg.modules() if not alg.is_projective(m)
    )
