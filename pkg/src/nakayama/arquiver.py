"""The Auslander-Reiten quiver of a cyclic Nakayama algebra.

Nodes are all indecomposables M(x, l), 1 <= l <= p_x.  Irreducible maps are
the quotients M(x, l) -> M(x, l-1) (drop the socle) and the inclusions
M(x, l) -> M(x-1, l+1) (extend the top by one), the latter existing when
l + 1 <= p_{x-1}.  The translate is tau M(x, l) = M(x+1, l) for
non-projective M(x, l).

Each node carries one mark for rendering the Gorenstein core:

    elementary       E(x) itself
    core-projective  projective member of the core
    core             other core member
    deleted-ray      top not in X (the whole ray through the node is cut)
    deleted-coray    top in X but the end vertex is not (coray cut)

deleted-ray wins when both deletions apply.  The cylinder identification is
implicit: vertices are already reduced mod s, so no boundary column is
duplicated and the core-marked nodes number exactly g * p'.
"""

from __future__ import annotations

from .algebra import KupischSeries, Mod
from .core import CoreProfile


class ArQuiver:
    __slots__ = ("alg", "nodes", "arrows", "marks")

    def __init__(
        self,
        alg: KupischSeries,
        nodes: tuple[Mod, ...],
        arrows: tuple[tuple[Mod, Mod], ...],
        marks: dict[Mod, str],
    ):
        self.alg = alg
        self.nodes = nodes
        self.arrows = arrows
        self.marks = marks

    def __repr__(self) -> str:
        return f"ArQuiver({list(self.alg.p)}, {len(self.nodes)} nodes)"

    def tau(self, m: Mod) -> Mod:
        """Auslander-Reiten translate of a non-projective node."""
        assert not self.alg.is_projective(m)
        return Mod(m.top % self.alg.s + 1, m.length)


def build_ar(alg: KupischSeries, profile: CoreProfile) -> ArQuiver:
    """Nodes in (top, length) order, arrows, and core marks."""
    s = alg.s
    xs = profile.x_set
    elems = set(profile.elementaries.values())

    nodes = tuple(alg.modules())

    arrows = []
    for m in nodes:
        x, length = m
        if length >= 2:
            arrows.append((m, Mod(x, length - 1)))
        prev = (x - 2) % s + 1
        if length + 1 <= alg.p[prev - 1]:
            arrows.append((m, Mod(prev, length + 1)))

    marks = {}
    for m in nodes:
        x, length = m
        if x not in xs:
            marks[m] = "deleted-ray"
        elif (x + length - 1) % s + 1 not in xs:
            marks[m] = "deleted-coray"
        elif m in elems:
            marks[m] = "elementary"
        elif alg.is_projective(m):
            marks[m] = "core-projective"
        else:
            marks[m] = "core"

    return ArQuiver(alg, nodes, tuple(arrows), marks)


_MARK_ATTRS = {
    "elementary": 'shape=doublecircle, style=filled, fillcolor=lightgrey',
    "core-projective": 'style="filled,bold", fillcolor=lightgrey',
    "core": "style=filled, fillcolor=lightgrey",
    "deleted-ray": "color=gray, fontcolor=gray",
    "deleted-coray": "color=gray, fontcolor=gray",
}


def node_id(m: Mod) -> str:
    return f"M_{m.top}_{m.length}"


def to_dot(arq: ArQuiver, mark_core: bool = True) -> str:
    """Graphviz digraph; deterministic node ids M_x_l and fixed emission order."""
    lines = ["digraph ar_quiver {", "  node [shape=circle];"]
    for m in arq.nodes:
        attrs = f'label="{m.top},{m.length}"'
        if mark_core:
            attrs += ", " + _MARK_ATTRS[arq.marks[m]]
        lines.append(f"  {node_id(m)} [{attrs}];")
    for src, dst in arq.arrows:
        lines.append(f"  {node_id(src)} -> {node_id(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
