"""Resolution quiver: the map gamma, coloring, cycles, distances, sources.

gamma(x) = x + p_x mod s.  Frozen quivers below were computed by hand
from that formula and cross-checked against the syzygy identity
Omega^2 H(x) = H(gamma x) where both sides exist.
"""

import pytest

from nakayama import KupischSeries, ResolutionQuiver, enumerate_kupisch, gamma_of

WORKED = KupischSeries((13, 13, 12, 12, 12))
SMALL = [alg for s in range(1, 5) for alg in enumerate_kupisch(s, 6)]


def rq(*p):
    return ResolutionQuiver(KupischSeries(p))


def test_gamma_frozen_values():
    assert [gamma_of(WORKED, x) for x in range(1, 6)] == [4, 5, 5, 1, 2]
    alg = KupischSeries((5, 5, 4))
    assert [gamma_of(alg, x) for x in range(1, 4)] == [3, 1, 1]
    const = KupischSeries((4, 4))
    assert [gamma_of(const, x) for x in (1, 2)] == [1, 2]


def test_gamma_is_vertex_plus_plen():
    for alg in SMALL:
        for x in range(1, alg.s + 1):
            assert gamma_of(alg, x) == alg.vertex(x + alg.plen(x))


def test_worked_example_quiver():
    q = rq(13, 13, 12, 12, 12)
    assert q.gamma == {1: 4, 2: 5, 3: 5, 4: 1, 5: 2}
    assert q.black == frozenset({1, 3, 4, 5})
    assert q.cycles == ((1, 4), (2, 5))
    assert q.cyclically_black == frozenset({1, 4})
    assert q.sources == frozenset({3})
    assert q.color(1) == "black" and q.color(2) == "red"
    assert q.max_distance() is None  # cycle (2,5) is not black


def test_three_vertex_quivers():
    q = rq(5, 5, 4)
    assert q.cycles == ((1, 3),)
    assert q.cyclically_black == frozenset({1, 3})
    assert q.sources == frozenset({2})
    assert q.dist == {1: 0, 3: 0, 2: 1}
    assert q.max_distance() == 1

    q = rq(7, 7, 6)
    assert q.gamma == {1: 2, 2: 3, 3: 3}
    assert q.cycles == ((3,),)
    assert q.black == frozenset({1, 3})  # p_3 = 6 < 7 makes vertex 2 red
    assert q.dist == {3: 0, 2: 1, 1: 2}
    assert q.max_distance() == 2

    q = rq(3, 3, 2)
    assert q.cycles == ((1,), (2,))
    assert q.black == frozenset({1, 3})
    assert q.cyclically_black == frozenset({1})
    assert q.color(2) == "red"
    assert q.max_distance() is None


def test_constant_series_quiver():
    # gamma is a permutation: every vertex lies on a cycle, no sources
    for p, s in ((4, 2), (3, 3), (6, 4)):
        q = ResolutionQuiver(KupischSeries((p,) * s))
        assert q.black == frozenset(range(1, s + 1))
        assert q.sources == frozenset()
        assert q.cyclically_black == frozenset(range(1, s + 1))
        assert q.max_distance() == 0


def test_cycles_are_canonical():
    for alg in SMALL:
        q = ResolutionQuiver(alg)
        for c in q.cycles:
            assert c[0] == min(c)
            for a, b in zip(c, c[1:] + (c[0],)):
                assert q.gamma[a] == b
        assert list(q.cycles) == sorted(q.cycles, key=lambda c: c[0])
        # cycles partition the eventual image of gamma
        on_cycles = [x for c in q.cycles for x in c]
        assert len(on_cycles) == len(set(on_cycles))


def test_distance_and_sources():
    for alg in SMALL:
        q = ResolutionQuiver(alg)
        on_cycles = {x for c in q.cycles for x in c}
        assert q.sources == frozenset(range(1, alg.s + 1)) - set(q.gamma.values())
        assert q.sources.isdisjoint(on_cycles)
        for x in range(1, alg.s + 1):
            d = q.dist[x]
            if x in q.cyclically_black:
                assert d == 0
            elif d is not None:
                assert d >= 1 and q.dist[q.gamma[x]] == d - 1
            else:
                # x reaches a black cycle exactly when gamma(x) does
                assert q.dist[q.gamma[x]] is None


def test_sources_count_vs_black_count():
    # gamma identifies x+1 with gamma(x) unless x is black, so the image
    # of gamma misses s - t vertices
    for alg in SMALL:
        q = ResolutionQuiver(alg)
        assert len(q.sources) == alg.s - len(q.black)


def test_black_matches_minimality():
    for alg in SMALL:
        q = ResolutionQuiver(alg)
        assert q.black == frozenset(
            x for x in range(1, alg.s + 1) if alg.is_minimal_projective(x)
        )


def test_loop_dichotomy():
    assert rq(3, 3, 2).loop_dichotomy()
    assert rq(13, 13, 12, 12, 12).loop_dichotomy()
    assert rq(5, 5, 4).loop_dichotomy()
    for alg in SMALL:
        assert ResolutionQuiver(alg).loop_dichotomy()


def test_quiver_is_immutable():
    q = rq(5, 5, 4)
    with pytest.raises(AttributeError):
        q.black = frozenset()


def test_shift_by_s_preserves_quiver():
    for alg in SMALL:
        q1 = ResolutionQuiver(alg)
        q2 = ResolutionQuiver(KupischSeries(tuple(v + alg.s for v in alg.p)))
        assert q1.gamma == q2.gamma
        assert q1.black == q2.black
        assert q1.cycles == q2.cycles
