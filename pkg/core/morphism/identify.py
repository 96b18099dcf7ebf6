#!/usr/bin/env python3
"""
Identifiability of vertex pairs and vertex merging.

2-edge-colored setting: u and v can be identified iff they share no edge and
no unbalanced path u-w-v (the merge would create a loop or a digon).
Signed setting: re-signing is allowed first, which fails only when u and v
are antipodal on an unbalanced 4-cycle.
"""

import logging
from typing import List, Optional, Tuple, Union

from core.exceptions import NotIdentifiableError
from core.morphism.coloring import MergePlan
from core.sgraph.graph import Graph2EC, SwitchingSet, VertexId
from core.sgraph.switching import SignedClass, apply_switching, bp3_mask, up3_mask

logger = logging.getLogger(__name__)


def identifiable_2ec(g: Graph2EC, u: VertexId, v: VertexId) -> bool:
    g.check_pair(u, v)
    return not g.has_edge(u, v) and not up3_mask(g, u, v)


def identifiable_signed(sc: Union[SignedClass, Graph2EC], u: VertexId, v: VertexId) -> Optional[SwitchingSet]:
    """A switching after which u and v are identifiable, or None.

    Each common neighbour w contributes d_w = sign(uw) * sign(wv). All
    positive: nothing to do. All negative: re-sign at u. Mixed values mean
    an unbalanced 4-cycle through u and v, and no switching helps.
    A Graph2EC argument is treated as the representative to switch from.
    """
    g = sc.representative if isinstance(sc, SignedClass) else sc
    g.check_pair(u, v)
    if g.has_edge(u, v):
        return None
    positive = bp3_mask(g, u, v)
    negative = up3_mask(g, u, v)
    if positive and negative:
        return None
    if negative:
        return SwitchingSet.of([u])
    return SwitchingSet()


def merge_2ec(g: Graph2EC, u: VertexId, v: VertexId) -> Graph2EC:
    """Identify u and v; the lower id survives and keeps its name.

    Parallel edges of equal sign collapse. The absorbed vertex's name is
    recorded in the survivor's absorbed-name entry.
    """
    g.check_pair(u, v)
    if g.has_edge(u, v):
        raise NotIdentifiableError(u, v, 'loop')
    if up3_mask(g, u, v):
        raise NotIdentifiableError(u, v, 'digon')

    keep, drop = min(u, v), max(u, v)

    def relabel(w: VertexId) -> VertexId:
        if w == drop:
            return keep
        return w - 1 if w > drop else w

    merged = {}
    for a, b, s in g.edges:
        a, b = relabel(a), relabel(b)
        merged[(min(a, b), max(a, b))] = s
    names = g.names[:drop] + g.names[drop + 1:]
    absorbed = list(g.absorbed[:drop] + g.absorbed[drop + 1:])
    absorbed[keep] = absorbed[keep] + (g.names[drop],) + g.absorbed[drop]
    return Graph2EC(g.n - 1, tuple((a, b, s) for (a, b), s in merged.items()), names, tuple(absorbed))


def merge_signed(sc: SignedClass, u: VertexId, v: VertexId) -> SignedClass:
    """Re-sign as identifiable_signed prescribes, merge, and re-canonicalize."""
    g = sc.representative
    s = identifiable_signed(sc, u, v)
    if s is None:
        raise NotIdentifiableError(u, v, 'loop' if g.has_edge(u, v) else 'uc4')
    return SignedClass.of(merge_2ec(apply_switching(g, s), u, v))


def apply_merge_plan(g: Graph2EC, plan: MergePlan, signed: bool = False) -> Graph2EC:
    """Carry out a merge plan one identification at a time.

    Step vertices are ids of the original graph. In the signed setting each
    step's pre_switch (also original ids, all live) is applied before its
    merge. Every step goes through merge_2ec, so an illegal identification
    raises NotIdentifiableError naming the current ids.
    """
    plan.validate(g.n)
    current: List[Optional[VertexId]] = list(range(g.n))
    for i, step in enumerate(plan.steps):
        if signed and step.pre_switch:
            live = SwitchingSet.of(current[w] for w in step.pre_switch)
            g = apply_switching(g, live)
        cu, cd = current[step.keep], current[step.drop]
        g = merge_2ec(g, cu, cd)
        low, high = min(cu, cd), max(cu, cd)
        for w, c in enumerate(current):
            if c is None:
                continue
            if c == high:
                current[w] = low
            elif c > high:
                current[w] = c - 1
        current[step.drop] = None
        logger.debug(f"step {i}: merged {cd} into {cu}, {g.n} vertices left")
    return g


def first_identifiable_pair(g: Graph2EC) -> Optional[Tuple[VertexId, VertexId]]:
    """Lowest (u, v) pair that could be identified in the 2-edge-colored setting."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if identifiable_2ec(g, u, v):
                return u, v
    return None


def first_identifiable_pair_signed(sc: SignedClass) -> Optional[Tuple[VertexId, VertexId]]:
    """Lowest (u, v) pair that could be identified after some re-signing."""
    for u in range(sc.n):
        for v in range(u + 1, sc.n):
            if identifiable_signed(sc, u, v) is not None:
                return u, v
    return None
