"""Enumeration and classification of cyclic Kupisch series.

Series are enumerated lexicographically under the cyclic serial condition.
Rotating a series relabels the vertices, so classes are keyed by the
lexicographically smallest rotation.  Subtracting p - 2 from every entry
yields the roof, a series with minimum 2: two series share a roof exactly
when they differ by a constant shift, and shifts by multiples of s leave
the resolution quiver unchanged.  Classification therefore only needs one
representative per roof and residue of p mod s; representatives are chosen
with p > s so the resolution-quiver criteria apply.

count_linear_admissible counts the admissible ideals of the linearly
ordered A_{s+1} path algebra (the Nakayama algebras with linear quiver);
the count is the Catalan number C_s.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple, Optional

from .algebra import KupischSeries
from .resolution import ResolutionQuiver


class ClassificationRow(NamedTuple):
    roof: tuple[int, ...]  # canonical rotation, min entry 2
    residue: int  # p mod s, representative in 1..s
    kind: str  # "G" (all cycles black), "F" (no black cycle), "Mixed"
    g: int
    v: Optional[int]  # Gorenstein dimension; None unless kind is "G"
    t: int


def enumerate_kupisch(s: int, p_max: int) -> Iterator[KupischSeries]:
    """All series (p_1..p_s) with 2 <= p_i <= p_max, cyclically serial, in lex order."""
    assert s >= 1 and p_max >= 2
    seq: list[int] = []

    def extend(i: int) -> Iterator[KupischSeries]:
        if i == s:
            if seq[0] >= seq[-1] - 1:  # wrap-around condition p_1 >= p_s - 1
                yield KupischSeries(seq)
            return
        lo = 2 if i == 0 else max(2, seq[-1] - 1)
        for v in range(lo, p_max + 1):
            seq.append(v)
            yield from extend(i + 1)
            seq.pop()

    return extend(0)


def canonical_rotation(ks: KupischSeries) -> KupischSeries:
    """The lexicographically smallest rotation of the series."""
    p = ks.p
    best = min(p[i:] + p[:i] for i in range(len(p)))
    return KupischSeries(best)


def roof(ks: KupischSeries) -> KupischSeries:
    """Subtract p - 2 from every entry; the result has minimum 2."""
    shift = ks.pmin - 2
    return KupischSeries(tuple(v - shift for v in ks.p))


def count_linear_admissible(s: int) -> int:
    """Number of admissible ideals of the linear A_{s+1} path algebra.

    Counted as the sequences (c_1..c_s) with 2 <= c_i <= s + 2 - i and
    c_i <= c_{i+1} + 1, taking c_{s+1} = 1 (the monotone-lattice-path
    form); the result is the Catalan number C_s.
    """
    assert s >= 1
    # ways[c] = number of completions of positions i+1..s given c_{i+1} = c
    ways = {1: 1}  # virtual position s+1
    for i in range(s, 0, -1):
        nxt = {}
        for c in range(2, s + 2 - i + 1):
            nxt[c] = sum(n for cn, n in ways.items() if c <= cn + 1)
        ways = nxt
    return sum(ways.values())


def roofs(s: int) -> list[tuple[int, ...]]:
    """All roofs for s vertices: canonical rotations with minimum entry 2.

    Entries of a roof never exceed s + 1 (from minimum 2, the series can
    only descend by 1 per step back to the minimum).
    """
    seen = set()
    for ks in enumerate_kupisch(s, s + 1):
        if ks.pmin == 2:
            seen.add(canonical_rotation(ks).p)
    return sorted(seen)


def classify(s: int) -> list[ClassificationRow]:
    """One row per roof and residue of p mod s, from a representative with p > s.

    kind G means every cycle of the resolution quiver is black (Gorenstein,
    v = 2 * max distance), F means no cycle is black (CM-free, empty core),
    Mixed means both kinds of cycle occur.  Rows sorted by (t, roof, residue).
    Each row is computed twice, from representatives p and p + s, asserting
    that the resolution quiver only depends on the roof and the residue.
    """
    rows = []
    for rf in roofs(s):
        for a in range(1, s + 1):
            m = s + 1
            while m % s != a % s:
                m += 1
            shift = m - 2  # roof minimum is 2; representative minimum is m > s
            rep = KupischSeries(tuple(v + shift for v in rf))
            rq = ResolutionQuiver(rep)
            rep2 = KupischSeries(tuple(v + shift + s for v in rf))
            rq2 = ResolutionQuiver(rep2)
            assert rq.gamma == rq2.gamma and rq.black == rq2.black and rq.cycles == rq2.cycles
            black_cycles = sum(1 for c in rq.cycles if all(x in rq.black for x in c))
            if black_cycles == len(rq.cycles):
                kind = "G"
            elif black_cycles == 0:
                kind = "F"
            else:
                kind = "Mixed"
            g = len(rq.cyclically_black)
            v = 2 * rq.max_distance() if kind == "G" else None
            t = len(rq.black)
            rows.append(ClassificationRow(rf, a, kind, g, v, t))
    rows.sort(key=lambda r: (r.t, r.roof, r.residue))
    return rows


def catalan(n: int) -> int:
    """Closed form C_n = binom(2n, n) / (n + 1), for cross-checking."""
    return math.comb(2 * n, n) // (n + 1)
