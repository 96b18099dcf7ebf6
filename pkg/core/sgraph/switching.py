#!/usr/bin/env python3
"""
Re-signing, switching equivalence and the structures that survive it.

Two 2-edge-colored graphs on the same underlying graph are equivalent when
a set of re-signings carries one signature to the other; a SignedClass is
such an equivalence class, stored through one canonical representative.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx

from core.exceptions import GraphError, UnderlyingGraphMismatch
from core.sgraph.bits import lowest_bit
from core.sgraph.graph import (
    Balance, CycleWitness, Graph2EC, PathWitness, Sign, SwitchingSet, VertexId,
)

logger = logging.getLogger(__name__)

UnsignedGraph = nx.Graph


def apply_switching(g: Graph2EC, s: SwitchingSet) -> Graph2EC:
    """Re-sign at every vertex of s; an edge flips iff exactly one endpoint is in s."""
    s.validate(g)
    if not s:
        return g
    members = s.members
    return g.with_edges(
        (u, v, sign.flipped() if (u in members) != (v in members) else sign)
        for u, v, sign in g.edges
    )


def resign_at(g: Graph2EC, v: VertexId) -> Graph2EC:
    """Invert the sign of every edge incident with v."""
    g.check_vertex(v)
    return apply_switching(g, SwitchingSet.of([v]))


def _bfs_labels(g: Graph2EC, flips: Dict[Tuple[VertexId, VertexId], bool]) -> Dict[VertexId, bool]:
    """Propagate a 0/1 label along the lowest-id BFS forest.

    The root of each component is labelled False; a child's label is its
    parent's label xor the flip flag of the tree edge.
    """
    graph = g.underlying()
    label: Dict[VertexId, bool] = {}
    for comp in g.components():
        root = comp[0]
        label[root] = False
        for parent, child in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            key = (parent, child) if parent < child else (child, parent)
            label[child] = label[parent] ^ flips[key]
    return label


def switching_between(g1: Graph2EC, g2: Graph2EC) -> Optional[SwitchingSet]:
    """A SwitchingSet carrying g1's signature to g2's, or None if there is none.

    The symmetric difference of the two negative-edge sets must be an edge
    cut; this is decided per component with a spanning-tree labelling, then
    every edge is checked against it.
    """
    if not g1.same_underlying(g2):
        raise UnderlyingGraphMismatch("graphs do not share the same underlying graph")
    flips = {(u, v): s is not g2.sign(u, v) for u, v, s in g1.edges}
    label = _bfs_labels(g1, flips)
    for (u, v), flipped in flips.items():
        if (label[u] != label[v]) != flipped:
            return None
    return SwitchingSet.of(v for v, on in label.items() if on)


def is_equivalent(g1: Graph2EC, g2: Graph2EC) -> bool:
    return switching_between(g1, g2) is not None


def canonical_signature(g: Graph2EC) -> Tuple[Graph2EC, SwitchingSet]:
    """Equivalent graph whose lowest-id BFS forest is all positive, plus the switching used."""
    flips = {(u, v): s is Sign.NEGATIVE for u, v, s in g.edges}
    label = _bfs_labels(g, flips)
    s = SwitchingSet.of(v for v, on in label.items() if on)
    return apply_switching(g, s), s


@dataclass(frozen=True)
class SignedClass:
    """A switching class [G, Sigma], stored as its canonical representative.

    Whatever graph is passed in is replaced by the canonical representative;
    source_switch records the switching that carried the given graph there.
    """

    representative: Graph2EC
    source_switch: SwitchingSet = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rep, s = canonical_signature(self.representative)
        object.__setattr__(self, 'representative', rep)
        object.__setattr__(self, 'source_switch', s)

    @classmethod
    def of(cls, g: Graph2EC) -> 'SignedClass':
        return cls(g)

    @property
    def n(self) -> int:
        return self.representative.n

    @property
    def names(self) -> Tuple[str, ...]:
        return self.representative.names

    def rebase(self, s: SwitchingSet) -> SwitchingSet:
        """Translate a switching between the source graph and the representative frame."""
        return self.source_switch.compose(s)

    def member(self, s: SwitchingSet) -> Graph2EC:
        return apply_switching(self.representative, s)


def cycle_balance(g: Graph2EC, c: Union[CycleWitness, List[VertexId], Tuple[VertexId, ...]]) -> Balance:
    """Unbalanced iff the cycle carries an odd number of negative edges."""
    vertices = c.vertices if isinstance(c, CycleWitness) else tuple(c)
    return CycleWitness.on(g, vertices).balance


def up3_mask(g: Graph2EC, u: VertexId, v: VertexId) -> int:
    """Common neighbours w of u and v with sign(uw) != sign(wv)."""
    return (g.pos[u] & g.neg[v]) | (g.neg[u] & g.pos[v])


def bp3_mask(g: Graph2EC, u: VertexId, v: VertexId) -> int:
    """Common neighbours w of u and v with sign(uw) == sign(wv)."""
    return (g.pos[u] & g.pos[v]) | (g.neg[u] & g.neg[v])


def up3_between(g: Graph2EC, u: VertexId, v: VertexId) -> Optional[PathWitness]:
    """An unbalanced path u-w-v through the lowest eligible w, if any."""
    g.check_pair(u, v)
    mask = up3_mask(g, u, v)
    if not mask:
        return None
    return PathWitness.on(g, (u, lowest_bit(mask), v))


def uc4_antipodal(sc: Union[SignedClass, Graph2EC], u: VertexId, v: VertexId) -> Optional[CycleWitness]:
    """An unbalanced 4-cycle u-w-v-w' having u and v as antipodal vertices, if any.

    Exists iff two common neighbours give different sign products; that test
    does not depend on the representative.
    """
    g = sc.representative if isinstance(sc, SignedClass) else sc
    g.check_pair(u, v)
    if g.has_edge(u, v):
        raise GraphError(f"vertices {u} and {v} are adjacent; antipodality is undefined")
    same = bp3_mask(g, u, v)
    differ = up3_mask(g, u, v)
    if not (same and differ):
        return None
    return CycleWitness.on(g, (u, lowest_bit(same), v, lowest_bit(differ)))


def twins_2ec(g: Graph2EC, u: VertexId, v: VertexId) -> bool:
    """Non-adjacent u, v with identical colored neighbourhoods."""
    g.check_pair(u, v)
    if g.has_edge(u, v):
        return False
    return g.pos[u] == g.pos[v] and g.neg[u] == g.neg[v]


def twins_signed(sc: SignedClass, u: VertexId, v: VertexId) -> bool:
    """Twins in the representative, or after re-signing at u."""
    g = sc.representative
    if twins_2ec(g, u, v):
        return True
    if g.has_edge(u, v):
        return False
    # re-signing at u swaps its positive and negative neighbourhoods
    return g.pos[u] == g.neg[v] and g.neg[u] == g.pos[v]


def twin_pairs(g: Graph2EC, signed: bool = False) -> List[Tuple[VertexId, VertexId]]:
    """All twin pairs (u < v) in ascending order."""
    sc = SignedClass.of(g) if signed else None
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if signed and twins_signed(sc, u, v):
                pairs.append((u, v))
            elif not signed and twins_2ec(g, u, v):
                pairs.append((u, v))
    return pairs


def rc_classes(g: Union[UnsignedGraph, Graph2EC]) -> List[List[VertexId]]:
    """Partition of the vertices into classes of equal (open) neighbourhood.

    Classes are listed by smallest member; members ascending.
    """
    if isinstance(g, nx.Graph):
        g = Graph2EC.from_unsigned(g)
    classes: Dict[int, List[VertexId]] = {}
    for v in range(g.n):
        classes.setdefault(g.adjacency(v), []).append(v)
    return sorted(classes.values(), key=lambda members: members[0])
