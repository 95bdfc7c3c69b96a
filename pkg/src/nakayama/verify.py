"""Exhaustive property verification over enumerated Kupisch series.

run_verification sweeps every connected cyclic Nakayama algebra with at
most s_max vertices and projective lengths at most p_max and checks, per
algebra, the structural identities the rest of the package relies on:

  * syzygy arithmetic: length complement, socle of the syzygy, counts of
    injectives and projective-injectives, vertex colors against the
    projectivity of the syzygies of the simples;
  * resolution-quiver combinatorics: cycle decomposition, sources = s - t,
    at most one black predecessor per vertex, red entrance into the black
    cycles, loop dichotomy, distance consistency;
  * agreement of the fast Gorenstein-projectivity test with the literal
    syzygy-orbit oracle on every non-projective indecomposable, and of
    the batched whole-algebra scan with both;
  * homological verdicts: the top of the double syzygy advances by gamma,
    Gorenstein status and v against memoized G-dimension tables, v even
    and at most 2s - 2 for p > s, CM-freeness against the module scan,
    global dimension against memoized projective dimensions (infinite
    whenever p > s), the self-injective case;
  * the Gorenstein core: X equals the set of tops of the non-projective
    Gorenstein projectives, supports of the elementaries partition the
    vertices, census g * p', peeling succeeds exactly on core members,
    minimality of the elementaries among factors and submodules, the
    successor walk covers X in one cycle, projective core members are
    exactly the P(x) with x in X;
  * the Auslander-Reiten quiver: translate and mesh balance, marks
    consistent with core membership, and the core re-assembled in its
    own coordinates (g * p' nodes, one connected component);
  * closure of the Gorenstein projectives under kernels, images and
    cokernels of maps between them, and under the two-sided rule for
    nested submodules with Gorenstein projective middle layer;
  * roof arithmetic: idempotence, shift invariance, and invariance of
    the resolution quiver under shifting the whole series by s.

Global checks (Catalan counts, classification consistency, enumeration
completeness) run once per sweep.  Failures carry the offending series;
the sweep also flags, without failing, any algebra of finite global
dimension whose resolution quiver mixes black and non-black cycles.
"""

from __future__ import annotations

import time
from typing import Callable, NamedTuple

from .algebra import KupischSeries, Mod
from .arquiver import build_ar
from .core import NonIntegralPPrime, NotInCore, core_profile, in_core, peel_filtration
from .enumeration import catalan, classify, count_linear_admissible, enumerate_kupisch, roof
from .gorenstein import (
    INFINITE,
    global_dimension,
    gorenstein_status,
    gp_modules,
    is_cm_free,
    is_gp_fast,
    is_gp_oracle,
)
from .resolution import ResolutionQuiver

_FAILURE_CAP = 50

_CORE_MARKS = frozenset(("core", "elementary", "core-projective"))


class SuiteStats(NamedTuple):
    checks: int
    failures: int


class VerificationResult(NamedTuple):
    s_max: int
    p_max: int
    series_count: int
    module_count: int
    suites: dict[str, SuiteStats]
    failures: tuple[str, ...]  # first _FAILURE_CAP failure messages
    failure_count: int
    flags: tuple[str, ...]  # informational finds, never failures
    oracle_elapsed: float  # seconds inside the fast-vs-oracle suite
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


_Rec = Callable[[str, int, int, tuple, "str | None"], None]


def _dim_table(alg: KupischSeries, zero_dim) -> dict[tuple[int, int], float]:
    """dim(M) = 0 on zero_dim states, else 1 + dim(syzygy M); cycles get INFINITE.

    States are (top, length) pairs.  Projective states must be zero_dim
    (their syzygy vanishes), so non-terminal states always have a next
    state and the recursion is total; memoized, amortized linear.
    """
    p = alg.p
    s = alg.s
    dim: dict[tuple[int, int], float] = {}
    for x0 in range(1, s + 1):
        for l0 in range(1, p[x0 - 1] + 1):
            cur = (x0, l0)
            if cur in dim:
                continue
            path: list[tuple[int, int]] = []
            on_path = set()
            while True:
                known = dim.get(cur)
                if known is not None:
                    base = known
                    break
                if cur in on_path:
                    k = path.index(cur)
                    for st in path[k:]:
                        dim[st] = INFINITE
                    del path[k:]
                    base = INFINITE
                    break
                if zero_dim(cur):
                    dim[cur] = 0
                    base = 0
                    break
                path.append(cur)
                on_path.add(cur)
                x, length = cur
                cur = ((x + length - 1) % s + 1, p[x - 1] - length)
            for st in reversed(path):
                base = base + 1
                dim[st] = base
    return dim


def _map_closure(alg: KupischSeries, gp: frozenset[Mod]):
    """Kernel/image/cokernel of any map between the gp modules stay in the class.

    A nonzero map M(x,a) -> M(y,b) has image both a top factor M(x,j) of the
    source and a bottom submodule M(y+i, b-i) of the target, so j = b - i
    with i = x - y mod s (plus multiples of s) and 1 <= j <= a.  Then the
    kernel is M(x+j, a-j) (may be projective) and the cokernel is M(y,i).
    """
    s = alg.s
    p = alg.p
    checks = fails = 0
    detail = None
    for x, a in gp:
        for y, b in gp:
            i = (x - y) % s
            while i < b:
                j = b - i
                if j <= a:
                    checks += 1
                    bad = (x, j) not in gp
                    if j < a:
                        kx = (x + j - 1) % s + 1
                        kl = a - j
                        if kl != p[kx - 1] and (kx, kl) not in gp:
                            bad = True
                    if i > 0 and (y, i) not in gp:
                        bad = True
                    if bad:
                        fails += 1
                        if detail is None:
                            detail = f"map M({x},{a}) -> M({y},{b}) at overlap {i}"
                i += s
    return checks, fails, detail


def _chain_closure(alg: KupischSeries, gp: frozenset[Mod]):
    """Nested submodules X' <= X'' of a gp module X with X''/X' Gorenstein
    projective force X' and X/X'' into the class as well."""
    s = alg.s
    p = alg.p
    checks = fails = 0
    detail = None
    for x, full in gp:
        for a in range(0, full):
            mx = (x + a - 1) % s + 1
            for b in range(a + 1, full):
                mid = (mx, b - a)
                if mid not in gp and b - a != p[mx - 1]:
                    continue
                checks += 1
                sx = (x + b - 1) % s + 1
                sl = full - b
                bad = sl != p[sx - 1] and (sx, sl) not in gp
                if a > 0 and (x, a) not in gp:
                    bad = True
                if bad:
                    fails += 1
                    if detail is None:
                        detail = f"layers of M({x},{full}) split at {a},{b}"
    return checks, fails, detail


def _check_series(alg: KupischSeries, rec: _Rec, flags: list[str]) -> float:
    s = alg.s
    p = alg.p
    ks = p
    rq = ResolutionQuiver(alg)
    gamma = rq.gamma
    black = rq.black
    cb = rq.cyclically_black
    t = len(black)
    mods = tuple(alg.modules())
    nonproj = tuple(m for m in mods if m.length != p[m.top - 1])

    # --- syzygy arithmetic ---------------------------------------------
    fails = 0
    detail = None
    for m in nonproj:
        om = alg.syzygy(m)
        px = p[m.top - 1]
        if om.length + m.length != px or alg.soc(om) != (m.top + px - 2) % s + 1:
            fails += 1
            detail = detail or f"syzygy arithmetic wrong at {m}"
    rec("syzygy-identities", len(nonproj), fails, ks, detail)

    n_inj = sum(1 for m in mods if alg.is_injective(m))
    rec("injective-count", 1, int(n_inj != s), ks,
        None if n_inj == s else f"{n_inj} injectives, expected {s}")

    n_pi = sum(1 for m in mods if alg.is_projective(m) and alg.is_injective(m))
    rec("projective-injective-count", 1, int(n_pi != t), ks,
        None if n_pi == t else f"{n_pi} projective-injectives, t = {t}")

    fails = 0
    detail = None
    for x in range(1, s + 1):
        # black(x) <=> rad P(x) = syzygy of S(x) is non-projective
        if (x in black) != (not alg.is_projective(alg.syzygy(Mod(x, 1)))):
            fails += 1
            detail = f"color of vertex {x} disagrees with the syzygy of S({x})"
    rec("coloring-pd-agreement", s, fails, ks, detail)

    # --- resolution-quiver combinatorics -------------------------------
    fails = 0
    detail = None
    oncycle: dict[int, int] = {}
    for ci, c in enumerate(rq.cycles):
        if c[0] != min(c) or (ci and rq.cycles[ci - 1][0] > c[0]):
            fails += 1
            detail = detail or f"cycle {c} not in canonical order"
        for k, v in enumerate(c):
            if v in oncycle or gamma[v] != c[(k + 1) % len(c)]:
                fails += 1
                detail = detail or f"cycle {c} is not a gamma-cycle"
            oncycle[v] = ci
    for x in range(1, s + 1):
        y = x
        for _ in range(s):
            y = gamma[y]
        if y not in oncycle:  # after s steps every walk sits on its cycle
            fails += 1
            detail = detail or f"walk from {x} missed the recorded cycles"
    rec("cycle-decomposition", 1, min(fails, 1), ks, detail)

    rec("sources-count", 1, int(len(rq.sources) != s - t), ks,
        None if len(rq.sources) == s - t else f"{len(rq.sources)} sources, s - t = {s - t}")

    fails = 0
    for y in range(1, s + 1):
        if sum(1 for x in black if gamma[x] == y) > 1:
            fails += 1
    rec("black-predecessor", s, fails, ks,
        None if not fails else "a vertex has two black predecessors")

    fails = 0
    detail = None
    for x in range(1, s + 1):
        if x not in cb and gamma[x] in cb and x in black:
            fails += 1
            detail = f"black vertex {x} outside the black cycles maps into them"
    rec("red-entrance", s, fails, ks, detail)

    rec("loop-dichotomy", 1, int(not rq.loop_dichotomy()), ks,
        None if rq.loop_dichotomy() else "loops mixed with longer cycles")

    fails = 0
    detail = None
    for x in range(1, s + 1):
        d = rq.dist[x]
        if (d == 0) != (x in cb):
            fails += 1
            detail = detail or f"distance 0 mismatch at {x}"
        if x not in cb:
            dg = rq.dist[gamma[x]]
            if (d is None) != (dg is None) or (d is not None and d != dg + 1):
                fails += 1
                detail = detail or f"distance at {x} is not 1 + distance at gamma({x})"
    rec("distance-consistency", s, fails, ks, detail)

    # --- fast test vs syzygy oracle, per module -------------------------
    t0 = time.perf_counter()
    gp = gp_modules(alg)
    fails = 0
    detail = None
    for m in nonproj:
        fast = is_gp_fast(alg, rq, m)
        oracle = is_gp_oracle(alg, m)
        if fast != oracle or (m in gp) != oracle:
            fails += 1
            detail = detail or f"{m}: fast={fast} oracle={oracle} batched={m in gp}"
    oracle_sec = time.perf_counter() - t0
    rec("oracle-equivalence", len(nonproj), fails, ks, detail)

    # --- homological verdicts -------------------------------------------
    gdim = _dim_table(alg, lambda st: st[1] == p[st[0] - 1] or st in gp)
    pdim = _dim_table(alg, lambda st: st[1] == p[st[0] - 1])

    fails = 0
    detail = None
    for m in nonproj:
        x, length = m
        nx = (x + length - 1) % s + 1
        nl = p[x - 1] - length
        if nl != p[nx - 1] and (nx + nl - 1) % s + 1 != gamma[x]:
            fails += 1
            detail = detail or f"top of the double syzygy of {m} is not gamma({x})"
    rec("syzygy-orbit", len(nonproj), fails, ks, detail)

    fails = 0
    detail = None
    maxg = max(gdim.values())
    status = gorenstein_status(alg, rq)
    if status.gorenstein != (maxg != INFINITE):
        fails += 1
        detail = detail or f"status {status.gorenstein} vs max G-dimension {maxg}"
    if status.gorenstein and status.v != maxg:
        fails += 1
        detail = detail or f"v = {status.v} but max G-dimension {maxg}"
    if alg.pmin > s:
        all_black = all(v in cb for c in rq.cycles for v in c)
        if status.gorenstein != all_black:
            fails += 1
            detail = detail or "all-cycles-black criterion disagrees with status"
    maxpd = max(pdim[(x, 1)] for x in range(1, s + 1))
    if max(pdim.values()) != maxpd:  # global dimension is attained on simples
        fails += 1
        detail = detail or "a non-simple module exceeds the simples' projective dimensions"
    if global_dimension(alg) != maxpd:
        fails += 1
        detail = detail or "global_dimension disagrees with the memoized table"
    if alg.pmin > s and maxpd != INFINITE:
        fails += 1
        detail = detail or "finite global dimension although p > s"
    if is_cm_free(alg, rq) != (not gp):
        fails += 1
        detail = detail or "CM-freeness disagrees with the Gorenstein projective scan"
    rec("gorenstein-status", 7, fails, ks, detail)

    if alg.pmin > s and status.gorenstein:
        v = status.v
        bad = v % 2 != 0 or not 0 <= v <= 2 * s - 2
        rec("gorenstein-bound", 1, int(bad), ks,
            None if not bad else f"v = {v} outside the even range 0..{2 * s - 2}")

    if alg.pmin == max(p):  # self-injective: everything non-projective is GP
        ok = len(gp) == len(nonproj) and status.gorenstein and status.v == 0
        rec("self-injective", 1, int(not ok), ks,
            None if ok else f"|gp| = {len(gp)} of {len(nonproj)}, status {status}")

    checks = fails = 0
    detail = None
    for x in range(1, s + 1):
        if p[x - 1] > s:
            checks += 1
            if alg.syzygy_n(alg.primitive(x), 2) != alg.primitive(gamma[x]):
                fails += 1
                detail = detail or f"double syzygy of H({x}) is not H(gamma({x}))"
    if checks:
        rec("primitive-double-syzygy", checks, fails, ks, detail)

    if maxpd != INFINITE:
        has_black = any(all(v in black for v in c) for c in rq.cycles)
        has_other = any(any(v not in black for v in c) for c in rq.cycles)
        if has_black and has_other:
            flags.append(f"{ks}: finite global dimension with mixed cycle colors")

    # --- the Gorenstein core ---------------------------------------------
    try:
        profile = core_profile(alg, rq)
    except NonIntegralPPrime as e:
        rec("core-census", 1, 1, ks, str(e))
        profile = None

    if profile is not None:
        xs = profile.x_set
        g = profile.g
        tops = frozenset(m.top for m in gp)
        rec("x-set-oracle", 1, int(xs != tops), ks,
            None if xs == tops else f"X = {sorted(xs)} but syzygy tops {sorted(tops)}")

        if g > 0:
            support = []
            total = 0
            for x, e in profile.elementaries.items():
                total += e.length
                support.extend((x + i - 1) % s + 1 for i in range(e.length))
            ok = total == s and sorted(support) == list(range(1, s + 1))
            rec("support-partition", 1, int(not ok), ks,
                None if ok else f"supports {sorted(support)} do not partition 1..{s}")

        census = sum(1 for m in mods if in_core(alg, profile, m))
        expect = g * profile.p_prime if g > 0 else 0
        rec("core-census", 1, int(census != expect), ks,
            None if census == expect else f"{census} core modules, expected {expect}")

        fails = 0
        detail = None
        peel_len: dict[Mod, int] = {}
        for m in mods:
            member = in_core(alg, profile, m)
            try:
                parts = peel_filtration(alg, profile, m)
            except NotInCore:
                parts = None
            if (parts is not None) != member:
                fails += 1
                detail = detail or f"{m}: in_core = {member}, peeling {'succeeded' if parts else 'failed'}"
            elif parts is not None:
                peel_len[m] = len(parts)
                pos = m.top
                good = True
                for e in parts:
                    if e is not profile.elementaries.get(pos):
                        good = False
                        break
                    pos = (pos + e.length - 1) % s + 1
                if not good or sum(e.length for e in parts) != m.length:
                    fails += 1
                    detail = detail or f"{m}: defective filtration {parts}"
        rec("peel-membership", len(mods), fails, ks, detail)

        if g > 0:
            fails = 0
            detail = None
            for x, e in profile.elementaries.items():
                bad = e not in gp or any((x, l) in gp for l in range(1, e.length))
                # no proper nonzero submodule may be Gorenstein projective
                if any(((x + j - 1) % s + 1, e.length - j) in gp for j in range(1, e.length)):
                    bad = True
                if bad:
                    fails += 1
                    detail = detail or f"E({x}) = {e} is not minimal"
            rec("elementary-minimality", g, fails, ks, detail)

            fails = 0
            detail = None
            succ = {}
            for x, e in profile.elementaries.items():
                y = (x + e.length - 1) % s + 1
                succ[x] = y
                if y not in xs:
                    fails += 1
                    detail = detail or f"successor {y} of {x} leaves X"
            if not fails:
                start = min(xs)
                seen = {start}
                cur = succ[start]
                steps = 0
                while cur != start and steps < g:
                    seen.add(cur)
                    cur = succ[cur]
                    steps += 1
                if cur != start or seen != xs:
                    fails = 1
                    detail = "the successor walk does not cover X in one cycle"
            rec("successor-cycle", 1, fails, ks, detail)

        fails = 0
        detail = None
        for x in range(1, s + 1):
            member = in_core(alg, profile, alg.projective(x))
            if member != (x in xs) or (x in xs and not alg.is_minimal_projective(x)):
                fails += 1
                detail = detail or f"core membership of P({x}) is wrong"
        rec("core-projectives", s, fails, ks, detail)

        # --- Auslander-Reiten quiver -----------------------------------
        arq = build_ar(alg, profile)
        fails = 0
        detail = None
        if arq.nodes != mods:
            fails += 1
            detail = "node list is not all modules in (top, length) order"
        into: dict[Mod, list[Mod]] = {}
        outof: dict[Mod, list[Mod]] = {}
        for a, b in arq.arrows:
            into.setdefault(b, []).append(a)
            outof.setdefault(a, []).append(b)
        for m in nonproj:
            tm = arq.tau(m)
            if tm.length > p[tm.top - 1]:
                fails += 1
                detail = detail or f"translate of {m} is not a module"
                continue
            mids = into.get(m, [])
            if sorted(mids) != sorted(outof.get(tm, [])):
                fails += 1
                detail = detail or f"mesh ends at {m} and starts at {tm} disagree"
            if 2 * m.length != sum(e.length for e in mids):
                fails += 1
                detail = detail or f"mesh length balance fails at {m}"
        rec("ar-mesh", len(nonproj) + 1, fails, ks, detail)

        fails = 0
        detail = None
        n_core = 0
        for m in mods:
            mk = arq.marks[m]
            member = in_core(alg, profile, m)
            if (mk in _CORE_MARKS) != member:
                fails += 1
                detail = detail or f"mark {mk} of {m} vs membership {member}"
            if mk == "deleted-ray" and m.top in xs:
                fails += 1
                detail = detail or f"{m} marked deleted-ray with top in X"
            if mk == "deleted-coray" and (m.top not in xs or (m.top + m.length - 1) % s + 1 in xs):
                fails += 1
                detail = detail or f"{m} wrongly marked deleted-coray"
            if (mk == "elementary") != (member and m == profile.elementaries.get(m.top)):
                fails += 1
                detail = detail or f"elementary mark wrong at {m}"
            if mk == "core-projective" and not alg.is_projective(m):
                fails += 1
                detail = detail or f"{m} marked core-projective but not projective"
            if mk in _CORE_MARKS:
                n_core += 1
        if n_core != expect:
            fails += 1
            detail = detail or f"{n_core} core marks, expected {expect}"
        rec("ar-marks", len(mods) + 1, fails, ks, detail)

        # The core in its own coordinates: each member is determined by its
        # top and its number of elementary layers; together they fill
        # X x {1..p'}, and quotient/extension steps connect everything.
        if g > 0:
            fails = 0
            detail = None
            pp = profile.p_prime
            coords = {}
            for m, k in peel_len.items():
                if not 1 <= k <= pp or (m.top, k) in coords:
                    fails += 1
                    detail = detail or f"layer coordinates of {m} collide"
                coords[(m.top, k)] = m
            if len(coords) != g * pp:
                fails += 1
                detail = detail or f"{len(coords)} coordinate pairs, expected {g * pp}"
            if not fails:
                pred = {y: x for x, y in succ.items()}
                seen = set()
                stack = [next(iter(coords))]
                while stack:
                    nd = stack.pop()
                    if nd in seen or nd not in coords:
                        continue
                    seen.add(nd)
                    x, k = nd
                    if k > 1:
                        stack.append((x, k - 1))
                        stack.append((succ[x], k - 1))
                    if k < pp:
                        stack.append((x, k + 1))
                        stack.append((pred[x], k + 1))
                if len(seen) != g * pp:
                    fails += 1
                    detail = "the re-assembled core is not connected"
            rec("core-structure", 1, min(fails, 1), ks, detail)

    # --- closure of the Gorenstein projectives ---------------------------
    c1, f1, d1 = _map_closure(alg, gp)
    c2, f2, d2 = _chain_closure(alg, gp)
    rec("gp-closure", c1 + c2, f1 + f2, ks, d1 or d2)

    # --- roof arithmetic --------------------------------------------------
    r = roof(alg)
    ok = roof(r) == r and roof(KupischSeries(tuple(v + 1 for v in p))) == r
    rqs = ResolutionQuiver(KupischSeries(tuple(v + s for v in p)))
    ok2 = rqs.gamma == gamma and rqs.black == black and rqs.cycles == rq.cycles
    rec("roof-invariance", 2, int(not ok) + int(not ok2), ks,
        None if ok and ok2 else "roof or shift invariance violated")

    return oracle_sec


def _global_checks(s_max: int, rec: _Rec) -> None:
    fails = 0
    detail = None
    for s in range(1, 9):
        if count_linear_admissible(s) != catalan(s):
            fails += 1
            detail = detail or f"linear count disagrees with the closed form at s = {s}"
    rec("catalan-closed-form", 8, fails, (), detail)

    got = sum(1 for _ in enumerate_kupisch(2, 3))
    rec("enumeration-completeness", 1, int(got != 4), (2, 3),
        None if got == 4 else f"{got} series for s = 2, p_max = 3, expected 4")

    checks = fails = 0
    detail = None
    for s in range(1, min(s_max, 5) + 1):
        for row in classify(s):
            checks += 1
            m = s + 1
            while m % s != row.residue % s:
                m += 1
            rep = KupischSeries(tuple(v + m - 2 for v in row.roof))
            rq = ResolutionQuiver(rep)
            status = gorenstein_status(rep, rq)
            ok = (
                (row.kind == "G") == status.gorenstein
                and (row.kind == "F") == is_cm_free(rep, rq)
                and row.g == len(rq.cyclically_black)
                and row.t == len(rq.black)
                and (row.v == status.v if row.kind == "G" else row.v is None)
            )
            if not ok:
                fails += 1
                detail = detail or f"classification row {row} disagrees with its representative"
    rec("classify-consistency", checks, fails, (), detail)


def run_verification(s_max: int = 5, p_max: int = 12) -> VerificationResult:
    """Run every suite over all series with s <= s_max, 2 <= p_i <= p_max."""
    t_start = time.perf_counter()
    suites: dict[str, list[int]] = {}
    failures: list[str] = []
    flags: list[str] = []

    def rec(suite: str, checks: int, fails: int, series: tuple, detail) -> None:
        st = suites.setdefault(suite, [0, 0])
        st[0] += checks
        st[1] += fails
        if fails and len(failures) < _FAILURE_CAP:
            failures.append(f"{tuple(series)} {suite}: {detail}")

    series_count = 0
    module_count = 0
    oracle_elapsed = 0.0
    for s in range(1, s_max + 1):
        for alg in enumerate_kupisch(s, p_max):
            series_count += 1
            module_count += alg.num_modules()
            oracle_elapsed += _check_series(alg, rec, flags)
    _global_checks(s_max, rec)

    stats = {name: SuiteStats(c, f) for name, (c, f) in sorted(suites.items())}
    return VerificationResult(
        s_max=s_max,
        p_max=p_max,
        series_count=series_count,
        module_count=module_count,
        suites=stats,
        failures=tuple(failures),
        failure_count=sum(f for _, f in stats.values()),
        flags=tuple(flags),
        oracle_elapsed=oracle_elapsed,
        elapsed=time.perf_counter() - t_start,
    )
