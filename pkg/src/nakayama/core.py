"""The Gorenstein core: X, elementary modules, membership, peeling, g and p'.

X is the set of vertices x whose projective P(x) has a non-projective
Gorenstein projective factor module.  For p > s this is exactly the set of
cyclically black vertices; for p <= s only the definitional syzygy-oracle
scan is valid.  For x in X, the elementary module E(x) is the smallest
Gorenstein projective factor of P(x).  The extension closure of the
elementaries (the Gorenstein core) behaves like the module category of a
self-injective Nakayama algebra with g = |X| simples and projective length
p' = (sum of p_x over X) / s; its indecomposables are the g * p' modules
whose top lies in X and whose "end vertex" top + length lands in X again.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .algebra import KupischSeries, Mod
from .gorenstein import gp_modules, is_gp_fast
from .resolution import ResolutionQuiver


class NoElementary(ValueError):
    """elementary(x) was asked for a vertex outside X."""


class NotInCore(ValueError):
    """peel_filtration was asked for a module outside the Gorenstein core."""


class NonIntegralPPrime(AssertionError):
    """Internal check: sum of p_x over X must be divisible by s."""


class CoreProfile(NamedTuple):
    x_set: frozenset[int]
    elementaries: dict[int, Mod]  # E(x) keyed by x in x_set
    g: int
    p_prime: Optional[int]  # None when the core is zero (g = 0)
    t: int  # number of minimal projectives


def x_set(alg: KupischSeries, rq: ResolutionQuiver) -> frozenset[int]:
    """Vertices whose projective has a non-projective Gorenstein projective factor."""
    if alg.pmin > alg.s:
        return rq.cyclically_black
    # Below the p > s threshold cyclically black can overcount; fall back to
    # the definition, evaluated by the batched syzygy oracle.
    return frozenset(m.top for m in gp_modules(alg))


def elementary(alg: KupischSeries, rq: ResolutionQuiver, x: int) -> Mod:
    """E(x): the smallest Gorenstein projective factor module of P(x)."""
    for length in range(1, alg.p[x - 1]):
        m = Mod(x, length)
        if is_gp_fast(alg, rq, m):
            return m
    raise NoElementary(f"vertex {x} is not in X: P({x}) has no Gorenstein projective factor")


def core_profile(alg: KupischSeries, rq: ResolutionQuiver) -> CoreProfile:
    """Assemble X, the elementaries, g, p', and t."""
    xs = x_set(alg, rq)
    elems = {x: elementary(alg, rq, x) for x in sorted(xs)}
    g = len(xs)
    if g == 0:
        p_prime = None
    else:
        total = sum(alg.p[x - 1] for x in xs)
        if total % alg.s != 0:
            raise NonIntegralPPrime(
                f"sum of p_x over X = {total} is not divisible by s = {alg.s}"
            )
        p_prime = total // alg.s
    t = sum(1 for x in range(1, alg.s + 1) if alg.is_minimal_projective(x))
    return CoreProfile(xs, elems, g, p_prime, t)


def in_core(alg: KupischSeries, profile: CoreProfile, m: Mod) -> bool:
    """Does m belong to the Gorenstein core?

    Membership needs top m in X and soc m in tau^- X; the latter says the
    end vertex top + length (mod s) lies in X again.
    """
    xs = profile.x_set
    return m.top in xs and (m.top + m.length - 1) % alg.s + 1 in xs


def peel_filtration(alg: KupischSeries, profile: CoreProfile, m: Mod) -> list[Mod]:
    """Filtration of m by elementary modules, peeled greedily from the top.

    The elementaries have pairwise distinct tops, so the top filtration
    factor of a core module with top x can only be E(x): emit it, advance
    the top past it, repeat.  Raises NotInCore when the top leaves X or the
    remaining length cannot be matched.
    """
    x = m.top
    remaining = m.length
    parts = []
    while remaining > 0:
        e = profile.elementaries.get(x)
        if e is None:
            raise NotInCore(f"{m}: intermediate top {x} is not in X")
        if e.length > remaining:
            raise NotInCore(f"{m}: remaining length {remaining} < |E({x})| = {e.length}")
        parts.append(e)
        x = (x + e.length - 1) % alg.s + 1
        remaining -= e.length
    return parts
