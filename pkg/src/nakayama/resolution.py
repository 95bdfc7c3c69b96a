"""The resolution quiver of a cyclic Nakayama algebra.

The resolution quiver R has the simple modules 1..s as vertices and one arrow
x -> gamma(x) out of every vertex, where

    gamma(x) = tau(soc P(x)) = x + p_x  (mod s).

Since every vertex has out-degree one, R is a functional graph: every weakly
connected component contains exactly one cycle, with trees hanging off it.

A vertex x is black when P(x) is minimal projective (p_{x+1} >= p_x),
red otherwise (p_{x+1} = p_x - 1).  A vertex is cyclically black when it lies
on a cycle consisting entirely of black vertices; those cycles control the
Gorenstein projective modules.  dist(x) is the number of gamma-steps from x
to the nearest black cycle (None when the cycle of x's component is not
black, since x can only ever reach that one cycle).
"""

from __future__ import annotations

from .algebra import KupischSeries


def gamma_of(alg: KupischSeries, x: int) -> int:
    """gamma(x) = x + p_x reduced to 1..s."""
    return (x + alg.p[x - 1] - 1) % alg.s + 1


class ResolutionQuiver:
    """Built functional graph of gamma with coloring, cycles, and distances.

    cycles are tuples in gamma-order, each starting at its minimal vertex
    label, and the list of cycles is sorted by that minimal label, so the
    representation is canonical.
    """

    __slots__ = ("alg", "gamma", "black", "cycles", "cyclically_black", "dist", "sources")

    def __init__(self, alg: KupischSeries):
        s = alg.s
        gamma = {x: gamma_of(alg, x) for x in range(1, s + 1)}
        black = frozenset(x for x in range(1, s + 1) if alg.is_minimal_projective(x))

        # Cycle decomposition of the functional graph: walk from every
        # unvisited vertex; a revisit inside the current walk closes a cycle.
        ON_PATH, DONE = 1, 2
        state: dict[int, int] = {}
        cycles = []
        for start in range(1, s + 1):
            if start in state:
                continue
            path = []
            x = start
            while x not in state:
                state[x] = ON_PATH
                path.append(x)
                x = gamma[x]
            if state[x] == ON_PATH:
                cyc = path[path.index(x):]
                i = cyc.index(min(cyc))
                cycles.append(tuple(cyc[i:] + cyc[:i]))
            for v in path:
                state[v] = DONE
        cycles.sort(key=lambda c: c[0])

        cyclically_black = frozenset(
            v for c in cycles if all(x in black for x in c) for v in c
        )

        # Distance to the black cycles: reverse breadth-first search.
        preds: dict[int, list[int]] = {x: [] for x in range(1, s + 1)}
        for x in range(1, s + 1):
            preds[gamma[x]].append(x)
        dist: dict[int, int | None] = {x: None for x in range(1, s + 1)}
        queue = sorted(cyclically_black)
        for x in queue:
            dist[x] = 0
        while queue:
            nxt = []
            for x in queue:
                for p in preds[x]:
                    if dist[p] is None:
                        dist[p] = dist[x] + 1
                        nxt.append(p)
            queue = nxt

        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "black", black)
        object.__setattr__(self, "cycles", tuple(cycles))
        object.__setattr__(self, "cyclically_black", cyclically_black)
        object.__setattr__(self, "dist", dist)
        object.__setattr__(
            self, "sources", frozenset(range(1, s + 1)) - frozenset(gamma.values())
        )

    def __setattr__(self, name, value):
        raise AttributeError("ResolutionQuiver is immutable")

    def __repr__(self) -> str:
        return f"ResolutionQuiver({list(self.alg.p)})"

    def color(self, x: int) -> str:
        return "black" if x in self.black else "red"

    def max_distance(self) -> int | None:
        """Max of dist over all vertices; None if some vertex reaches no black cycle."""
        worst = 0
        for x in range(1, self.alg.s + 1):
            d = self.dist[x]
            if d is None:
                return None
            if d > worst:
                worst = d
        return worst

    def loop_dichotomy(self) -> bool:
        """True iff no cycle is a loop or every cycle is a loop."""
        loops = sum(1 for c in self.cycles if len(c) == 1)
        return loops == 0 or loops == len(self.cycles)
