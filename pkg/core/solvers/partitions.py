#!/usr/bin/env python3
"""
Exhaustive search over vertex partitions of a 2-edge-colored graph.

Partitions are enumerated as restricted-growth strings in vertex order, so
every partition is met once and lexicographic order is well defined. A
partial partition is dropped as soon as it has a monochromatic edge or two
classes joined by edges of both signs. Completeness (the quotient being a
clique) is only checked on full partitions.
"""

import logging
from typing import List, Optional, Tuple

from core.sgraph.bits import full_mask, iter_bits
from core.sgraph.graph import Graph2EC

logger = logging.getLogger(__name__)

MAXIMIZE = 'max'
MINIMIZE = 'min'

COMPLETE_2EC = '2ec'
COMPLETE_SIGNED = 'signed'

Labels = Tuple[int, ...]


def quotient_masks(members: List[int], pos: List[int], neg: List[int]) -> Tuple[List[int], List[int]]:
    """Positive and negative adjacency of the quotient, as masks over class indices."""
    k = len(members)
    qpos = [0] * k
    qneg = [0] * k
    for c in range(k):
        for d in range(k):
            if pos[c] & members[d]:
                qpos[c] |= 1 << d
            if neg[c] & members[d]:
                qneg[c] |= 1 << d
    return qpos, qneg


def masks_form_clique(qpos: List[int], qneg: List[int], signed: bool) -> bool:
    """Clique test on a graph given by its positive/negative adjacency masks."""
    k = len(qpos)
    everyone = full_mask(k)
    for c in range(k):
        up = bp = 0
        for d in iter_bits(qpos[c]):
            up |= qneg[d]
            bp |= qpos[d]
        for d in iter_bits(qneg[c]):
            up |= qpos[d]
            bp |= qneg[d]
        covered = qpos[c] | qneg[c] | (1 << c)
        covered |= (up & bp) if signed else up
        if covered != everyone:
            return False
    return True


class PartitionSearch:
    """Best valid partition of one graph, by number of classes.

    goal is MAXIMIZE or MINIMIZE; complete is None (any valid coloring),
    COMPLETE_2EC or COMPLETE_SIGNED (the quotient must be a clique of that
    kind). Among optimal partitions the lexicographically smallest
    restricted-growth string is returned.
    """

    def __init__(self, g: Graph2EC, goal: str = MAXIMIZE, complete: Optional[str] = COMPLETE_2EC):
        if goal not in (MAXIMIZE, MINIMIZE):
            raise ValueError(f"unknown goal {goal!r}")
        if complete not in (None, COMPLETE_2EC, COMPLETE_SIGNED):
            raise ValueError(f"unknown completeness mode {complete!r}")
        self.g = g
        self.maximize = goal == MAXIMIZE
        self.complete = complete
        self.nodes = 0
        self._best_value = 0
        self._best: Optional[Labels] = None

    def run(self, bound: Optional[int] = None) -> Optional[Tuple[int, Labels]]:
        """Best (value, labels) strictly better than bound, or None if there is none."""
        n = self.g.n
        if bound is None:
            bound = -1 if self.maximize else n + 1
        self._best_value = bound
        self._best = None
        self.nodes = 0
        self._extend(0, [], [], [], [0] * n)
        logger.debug(f"partition search on {n} vertices visited {self.nodes} nodes, "
                     f"best {self._best_value if self._best is not None else None}")
        if self._best is None:
            return None
        return self._best_value, self._best

    def _accepts(self, members: List[int], pos: List[int], neg: List[int]) -> bool:
        if self.complete is None:
            return True
        qpos, qneg = quotient_masks(members, pos, neg)
        return masks_form_clique(qpos, qneg, self.complete == COMPLETE_SIGNED)

    def _extend(self, v: int, members: List[int], pos: List[int], neg: List[int], labels: List[int]) -> None:
        self.nodes += 1
        g = self.g
        k = len(members)
        if v == g.n:
            better = k > self._best_value if self.maximize else k < self._best_value
            if better and self._accepts(members, pos, neg):
                self._best_value = k
                self._best = tuple(labels)
            return
        if self.maximize and k + (g.n - v) <= self._best_value:
            return
        if not self.maximize and k >= self._best_value:
            return

        pv, nv = g.pos[v], g.neg[v]
        adjacent = pv | nv
        bit = 1 << v
        for c in range(k + 1):
            if c < k:
                if adjacent & members[c]:
                    continue
                new_pos, new_neg = pos[c] | pv, neg[c] | nv
            else:
                if not self.maximize and k + 1 >= self._best_value:
                    break
                new_pos, new_neg = pv, nv
            if any(d != c and new_pos & members[d] and new_neg & members[d] for d in range(k)):
                continue

            labels[v] = c
            if c < k:
                old = members[c], pos[c], neg[c]
                members[c], pos[c], neg[c] = old[0] | bit, new_pos, new_neg
                self._extend(v + 1, members, pos, neg, labels)
                members[c], pos[c], neg[c] = old
            else:
                members.append(bit)
                pos.append(new_pos)
                neg.append(new_neg)
                self._extend(v + 1, members, pos, neg, labels)
                members.pop()
                pos.pop()
                neg.pop()
