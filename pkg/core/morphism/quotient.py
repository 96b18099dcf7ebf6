#!/usr/bin/env python3
"""
Quotient by a coloring and homomorphism verification.

A coloring is valid when no edge is monochromatic and all edges between two
color classes share one sign; its quotient then identifies every color class
to a single vertex.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import GraphError
from core.morphism.coloring import Coloring
from core.sgraph.bits import iter_bits
from core.sgraph.graph import Graph2EC, Sign, SwitchingSet, VertexId
from core.sgraph.switching import SignedClass, apply_switching

logger = logging.getLogger(__name__)

MONOCHROMATIC = 'monochromatic-edge'
SIGN_CONFLICT = 'sign-conflict'


@dataclass(frozen=True)
class Violation:
    """First reason a coloring is not a homomorphism.

    colors are 1-based and ordered (low, high); edges lists the offending
    edge, or the two edges of opposite sign between the same classes.
    """

    kind: str
    colors: Tuple[int, int]
    edges: Tuple[Tuple[VertexId, VertexId, Sign], ...]

    def describe(self, g: Graph2EC) -> str:
        shown = ", ".join(f"{g.names[u]}-{g.names[v]} {s.token}" for u, v, s in self.edges)
        return f"{self.kind} between colors {self.colors[0]} and {self.colors[1]}: {shown}"


@dataclass(frozen=True)
class Quotient:
    graph: Optional[Graph2EC] = None
    violation: Optional[Violation] = None

    @property
    def ok(self) -> bool:
        return self.graph is not None


def _source_graph(g: Graph2EC, col: Coloring) -> Graph2EC:
    col.check_graph(g)
    if col.switching:
        return apply_switching(g, col.switching)
    return g


def quotient(g: Graph2EC, col: Coloring) -> Quotient:
    """Identify each color class of g (after col.switching, if any).

    Quotient vertex i - 1 stands for color i; it carries the name of the
    lowest member and records the other members' names as absorbed.
    Violations are reported for the first edge in (low color, high color,
    lower endpoint, higher endpoint) order.
    """
    g = _source_graph(g, col)
    keyed = sorted(
        (min(col.colors[u], col.colors[v]), max(col.colors[u], col.colors[v]), u, v, s)
        for u, v, s in g.edges
    )
    seen: Dict[Tuple[int, int], Tuple[VertexId, VertexId, Sign]] = {}
    for ci, cj, u, v, s in keyed:
        if ci == cj:
            return Quotient(violation=Violation(MONOCHROMATIC, (ci, cj), ((u, v, s),)))
        first = seen.setdefault((ci, cj), (u, v, s))
        if first[2] is not s:
            return Quotient(violation=Violation(SIGN_CONFLICT, (ci, cj), (first, (u, v, s))))

    classes = col.classes()
    names = tuple(g.names[members[0]] for members in classes)
    absorbed = tuple(
        tuple(name for w in members[1:] for name in (g.names[w],) + g.absorbed[w])
        + g.absorbed[members[0]]
        for members in classes
    )
    edges = tuple((ci - 1, cj - 1, s) for (ci, cj), (_, _, s) in seen.items())
    logger.debug(f"quotient of {g.n} vertices onto {col.k} colors, {len(edges)} edges")
    return Quotient(graph=Graph2EC(col.k, edges, names, absorbed))


def verify_hom_2ec(g: Graph2EC, h: Graph2EC, phi: Sequence[VertexId]) -> bool:
    """True iff phi is a surjective, edge- and sign-preserving map from g onto h."""
    if len(phi) != g.n:
        return False
    if any(not 0 <= x < h.n for x in phi):
        return False
    if len(set(phi)) != h.n:
        return False
    for u, v, s in g.edges:
        if h.sign(phi[u], phi[v]) is not s:
            return False
    return True


def verify_hom_signed(sc_g: SignedClass, sc_h: SignedClass, phi: Sequence[VertexId],
                      s: SwitchingSet) -> bool:
    """verify_hom_2ec after re-signing the representative of sc_g at s."""
    try:
        source = apply_switching(sc_g.representative, s)
    except GraphError:
        return False
    return verify_hom_2ec(source, sc_h.representative, phi)


def _class_masks(g: Graph2EC, col: Coloring) -> Tuple[List[int], List[int], List[int]]:
    """Per color class: member mask, positive and negative neighbourhood masks."""
    members = [0] * col.k
    pos = [0] * col.k
    neg = [0] * col.k
    for v, c in enumerate(col.colors):
        members[c - 1] |= 1 << v
        pos[c - 1] |= g.pos[v]
        neg[c - 1] |= g.neg[v]
    return members, pos, neg


def color_conflicts(g: Graph2EC, col: Coloring, signed: bool = False) -> Dict[Tuple[int, int], bool]:
    """Whether each color pair (i < j) is in conflict, read off the original graph.

    Colors i and j conflict when an edge joins their classes, or when some
    third class w is reached from i and from j with opposite signs (2-edge-
    colored), or with both equal and opposite signs (signed). The result
    is only meaningful for a valid coloring.
    """
    g = _source_graph(g, col)
    members, pos, neg = _class_masks(g, col)
    # sees[i][w] = set of signs by which class i reaches class w
    sees: List[Dict[int, set]] = [dict() for _ in range(col.k)]
    for i in range(col.k):
        for sign, mask in ((Sign.POSITIVE, pos[i]), (Sign.NEGATIVE, neg[i])):
            for v in iter_bits(mask):
                sees[i].setdefault(col.colors[v] - 1, set()).add(sign)

    conflicts: Dict[Tuple[int, int], bool] = {}
    for i in range(col.k):
        for j in range(i + 1, col.k):
            if (pos[i] | neg[i]) & members[j]:
                conflicts[(i + 1, j + 1)] = True
                continue
            same = differ = False
            for w, signs_i in sees[i].items():
                signs_j = sees[j].get(w)
                if not signs_j:
                    continue
                for a in signs_i:
                    for b in signs_j:
                        if a is b:
                            same = True
                        else:
                            differ = True
            conflicts[(i + 1, j + 1)] = (same and differ) if signed else differ
    return conflicts
