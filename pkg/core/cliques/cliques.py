#!/usr/bin/env python3
"""
Recognition of 2-edge-colored and signed cliques, and the apex extension.

Both checks work on per-vertex reach sets: up3_reach(g)[u] holds every v
joined to u by an unbalanced path u-w-v, bp3_reach(g)[u] every v joined by a
balanced one. A pair is non-identifiable in the 2-edge-colored setting when
it is adjacent or in up3 reach, and in the signed setting when it is
adjacent or in both reaches (an unbalanced 4-cycle with u, v antipodal).
"""

import logging
from typing import List, Optional, Sequence, Tuple

import config
from core.exceptions import SizeGuardError
from core.sgraph.bits import full_mask, iter_bits, lowest_bit
from core.sgraph.graph import Graph2EC, Sign, VertexId
from core.sgraph.switching import SignedClass
from core.utils.parallel import run_chunks

logger = logging.getLogger(__name__)

APEX_NAME = 'z'


def _up3_of(g: Graph2EC, u: VertexId) -> int:
    mask = 0
    for w in iter_bits(g.pos[u]):
        mask |= g.neg[w]
    for w in iter_bits(g.neg[u]):
        mask |= g.pos[w]
    return mask


def _bp3_of(g: Graph2EC, u: VertexId) -> int:
    mask = 0
    for w in iter_bits(g.pos[u]):
        mask |= g.pos[w]
    for w in iter_bits(g.neg[u]):
        mask |= g.neg[w]
    return mask


def up3_reach(g: Graph2EC) -> List[int]:
    return [_up3_of(g, u) for u in range(g.n)]


def bp3_reach(g: Graph2EC) -> List[int]:
    """Like up3_reach for balanced paths; u itself is included once it has a neighbour."""
    return [_bp3_of(g, u) for u in range(g.n)]


def _guard(g: Graph2EC, max_n: Optional[int]) -> None:
    limit = config.CLIQUE_MAX_N if max_n is None else max_n
    if g.n > limit:
        raise SizeGuardError("clique check", g.n, limit)


def _first_gap(g: Graph2EC, signed: bool, vertices: Sequence[VertexId]) -> Optional[Tuple[VertexId, VertexId]]:
    """Lowest identifiable pair (u, v) with u taken from vertices, or None."""
    everyone = full_mask(g.n)
    for u in vertices:
        adjacent = g.pos[u] | g.neg[u] | (1 << u)
        up = _up3_of(g, u)
        covered = adjacent | ((up & _bp3_of(g, u)) if signed else up)
        gap = everyone & ~covered
        if gap:
            return u, lowest_bit(gap)
    return None


def clique_counterexample(g: Graph2EC, signed: bool = False, max_n: Optional[int] = None,
                          workers: Optional[int] = None,
                          progress: bool = False) -> Optional[Tuple[VertexId, VertexId]]:
    """The identifiable pair (u, v) with lowest u, then lowest v, or None for a clique.

    The returned v may be lower than u. In the signed setting the answer does
    not depend on which member of the switching class g is.
    """
    _guard(g, max_n)
    found = run_chunks(range(g.n), lambda chunk: _first_gap(g, signed, chunk),
                       workers=workers, progress=progress, desc="Checking pairs")
    for pair in found:
        if pair is not None:
            logger.debug(f"identifiable pair found: {g.names[pair[0]]}, {g.names[pair[1]]}")
            return pair
    return None


def is_2ec_clique(g: Graph2EC, max_n: Optional[int] = None, workers: Optional[int] = None,
                  progress: bool = False) -> bool:
    return clique_counterexample(g, False, max_n, workers, progress) is None


def is_signed_clique(sc: SignedClass, max_n: Optional[int] = None, workers: Optional[int] = None,
                     progress: bool = False) -> bool:
    return clique_counterexample(sc.representative, True, max_n, workers, progress) is None


def _fresh_name(names: Sequence[str], base: str = APEX_NAME) -> str:
    taken = set(names)
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def add_apex(g: Graph2EC) -> Graph2EC:
    """g plus a new last vertex joined to every vertex by a positive edge."""
    z = g.n
    edges = g.edges + tuple((v, z, Sign.POSITIVE) for v in range(g.n))
    return Graph2EC(g.n + 1, edges, g.names + (_fresh_name(g.names),), g.absorbed + ((),))


def apex_extend(g: Graph2EC) -> SignedClass:
    """Signed class of g with a universal positive neighbour z.

    g is a 2-edge-colored clique iff the result is a signed clique.
    """
    return SignedClass.of(add_apex(g))
