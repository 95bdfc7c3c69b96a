"""Connected cyclic Nakayama algebras presented by their Kupisch series.

A connected Nakayama algebra whose quiver is the cycle 1 -> 2 -> ... -> s -> 1
and which has no simple projective modules is determined, up to isomorphism,
by its Kupisch series (p_1, ..., p_s): p_i is the composition length of the
indecomposable projective P(i), subject to

    p_i >= 2                 (no simple projectives),
    p_{i+1} >= p_i - 1       cyclically (rad P(i) is a factor module of P(i+1)).

Every indecomposable module is uniserial and is determined by its top vertex x
and its composition length l, with 1 <= l <= p_x.  Its composition factors,
read from the top down, are S(x), S(x+1), ..., S(x+l-1), indices mod s.
This module gives the series itself plus the arithmetic of those modules:
socle, syzygy, projectivity, injectivity, minimal projectives, and the
length-s "primitive" factor modules of the projectives.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence, Union


class KupischError(ValueError):
    """The given length sequence is not a valid cyclic Kupisch series."""


class EmptySeries(KupischError):
    """The length sequence is empty."""


class SimpleProjective(KupischError):
    """Some p_i <= 1, i.e. some projective would be simple."""


class SerialViolation(KupischError):
    """p_{i+1} < p_i - 1 somewhere, so rad P(i) is not a factor of P(i+1)."""


class TooShort(ValueError):
    """p_x < s, so the length-s factor module H(x) of P(x) does not exist."""


class ProjectiveInput(ValueError):
    """A Gorenstein-projectivity test was asked about a projective module."""


class Mod(NamedTuple):
    """An indecomposable (uniserial) module: top vertex and composition length."""

    top: int
    length: int

    def __repr__(self) -> str:
        return f"M({self.top},{self.length})"


class ZeroModule:
    """The zero module, e.g. the syzygy of a projective.

    A distinct variant rather than a length-0 Mod, so that 1 <= length stays
    an invariant of Mod.  Use the ZERO singleton; compare with `is`.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "ZERO"


ZERO = ZeroModule()

ModOrZero = Union[Mod, ZeroModule]


class KupischSeries:
    """A validated Kupisch series; all module arithmetic lives here.

    Vertices are labeled 1..s everywhere; cyclic arithmetic uses those
    representatives.  Instances are immutable value objects: equal series
    compare and hash equal, and every operation is a pure function.
    """

    __slots__ = ("p", "s", "pmin", "_minimal")

    def __init__(self, lengths: Sequence[int]):
        p = tuple(int(v) for v in lengths)
        if not p:
            raise EmptySeries("a Kupisch series needs at least one projective length")
        s = len(p)
        for i, v in enumerate(p):
            if v <= 1:
                raise SimpleProjective(f"p_{i + 1} = {v}: projective P({i + 1}) would be simple")
        for i, v in enumerate(p):
            nxt = p[(i + 1) % s]
            if nxt < v - 1:
                raise SerialViolation(
                    f"p_{(i + 1) % s + 1} = {nxt} < p_{i + 1} - 1 = {v - 1}:"
                    f" rad P({i + 1}) is not a factor module of P({(i + 1) % s + 1})"
                )
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "pmin", min(p))
        # x is minimal projective iff rad P(x) is non-projective iff p_{x+1} >= p_x.
        object.__setattr__(
            self, "_minimal", tuple(p[(i + 1) % s] >= p[i] for i in range(s))
        )

    def __setattr__(self, name, value):
        raise AttributeError("KupischSeries is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, KupischSeries) and self.p == other.p

    def __hash__(self) -> int:
        return hash(self.p)

    def __repr__(self) -> str:
        return f"KupischSeries({list(self.p)})"

    # ------------------------------------------------------------------
    # vertex arithmetic (representatives 1..s)

    def vertex(self, i: int) -> int:
        """Reduce an integer to its vertex representative in 1..s."""
        return (i - 1) % self.s + 1

    def tau(self, x: int) -> int:
        """Auslander-Reiten translate on simples: tau S(x) = S(x+1)."""
        return x % self.s + 1

    def tau_inv(self, x: int) -> int:
        return (x - 2) % self.s + 1

    def plen(self, x: int) -> int:
        """Composition length p_x of the projective P(x)."""
        return self.p[x - 1]

    # ------------------------------------------------------------------
    # module constructors

    def module(self, x: int, length: int) -> Mod:
        """Checked constructor for M(x, length)."""
        if not 1 <= x <= self.s:
            raise ValueError(f"vertex {x} out of range 1..{self.s}")
        if not 1 <= length <= self.p[x - 1]:
            raise ValueError(f"length {length} out of range 1..p_{x} = {self.p[x - 1]}")
        return Mod(x, length)

    def simple(self, x: int) -> Mod:
        return Mod(x, 1)

    def projective(self, x: int) -> Mod:
        return Mod(x, self.p[x - 1])

    def primitive(self, x: int) -> Mod:
        """The factor module H(x) = M(x, s) of P(x); requires p_x >= s."""
        if self.p[x - 1] < self.s:
            raise TooShort(f"p_{x} = {self.p[x - 1]} < s = {self.s}: H({x}) does not exist")
        return Mod(x, self.s)

    def modules(self) -> Iterator[Mod]:
        """All indecomposables, ordered by (top ascending, length ascending)."""
        for x in range(1, self.s + 1):
            for length in range(1, self.p[x - 1] + 1):
                yield Mod(x, length)

    def num_modules(self) -> int:
        return sum(self.p)

    # ------------------------------------------------------------------
    # structure of a module

    def soc(self, m: Mod) -> int:
        """Socle vertex of M(x, l): x + l - 1 mod s."""
        return (m.top + m.length - 2) % self.s + 1

    def is_projective(self, m: Mod) -> bool:
        return m.length == self.p[m.top - 1]

    def is_injective(self, m: Mod) -> bool:
        # M(x, l) extends properly to M(x-1, l+1) iff l + 1 <= p_{x-1};
        # no such extension means the socle cannot grow, i.e. M is injective.
        return self.p[(m.top - 2) % self.s] <= m.length

    def is_minimal_projective(self, x: int) -> bool:
        """Is P(x) minimal projective, i.e. is rad P(x) non-projective?

        rad P(x) = M(x+1, p_x - 1) is projective iff p_{x+1} = p_x - 1,
        so minimality is p_{x+1} >= p_x.  These are the black vertices of
        the resolution quiver.
        """
        return self._minimal[x - 1]

    def syzygy(self, m: Mod) -> ModOrZero:
        """Kernel of the projective cover P(top m) ->> m."""
        x, length = m
        px = self.p[x - 1]
        if length == px:
            return ZERO
        return Mod((x + length - 1) % self.s + 1, px - length)

    def syzygy_n(self, m: ModOrZero, n: int) -> ModOrZero:
        """n-fold syzygy; the zero module is absorbing."""
        assert n >= 0
        cur = m
        for _ in range(n):
            if cur is ZERO:
                return ZERO
            cur = self.syzygy(cur)
        return cur
