#!/usr/bin/env python3
"""
Gadget graphs built from 3-partition instances, and the apex reduction.

H(I) consists of
  - stars: center s_i with a_i positive pendant edges to leaves e_i_1..e_i_{a_i}
  - target: negative clique on t_1..t_m
  - grid: x_i_j for 1 <= i <= B+r+q, 1 <= j <= p; x_i_j x_i_l negative,
    x_i_j x_k_j positive
  - positive edges t_l x_i_1 for B < i <= B+r+q
  - connected variant: positive edges x_{B+r+q}_1 s_i
Vertex ids follow that order (each star center then its leaves, targets,
grid row by row). All indices in names are 1-based.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

import networkx as nx

import config
from core.cliques.cliques import add_apex
from core.exceptions import SizeGuardError
from core.morphism.coloring import Coloring, MergePlan, MergeStep
from core.reduction.three_partition import (
    PartitionSolution, ReductionParams, ThreePartitionInstance, k_of,
)
from core.sgraph.bits import iter_bits, lowest_bit
from core.sgraph.graph import Graph2EC, Sign, VertexId
from core.sgraph.switching import SignedClass

logger = logging.getLogger(__name__)

SignedEdge = Tuple[VertexId, VertexId, Sign]


@dataclass(frozen=True)
class GadgetLayout:
    """Vertex ids of H(I); every accessor takes 1-based indices."""

    inst: ThreePartitionInstance
    params: ReductionParams

    @property
    def rows(self) -> int:
        return self.params.rows(self.inst)

    @property
    def star_offsets(self) -> Tuple[int, ...]:
        offsets = []
        start = 0
        for a in self.inst.A:
            offsets.append(start)
            start += a + 1
        return tuple(offsets)

    @property
    def target_offset(self) -> int:
        return sum(self.inst.A) + len(self.inst.A)

    @property
    def grid_offset(self) -> int:
        return self.target_offset + self.inst.m

    @property
    def n(self) -> int:
        return self.grid_offset + self.rows * self.params.p

    def s(self, i: int) -> VertexId:
        return self.star_offsets[i - 1]

    def e(self, i: int, j: int) -> VertexId:
        return self.star_offsets[i - 1] + j

    def t(self, l: int) -> VertexId:  # noqa: E741
        return self.target_offset + l - 1

    def x(self, i: int, j: int) -> VertexId:
        return self.grid_offset + (i - 1) * self.params.p + (j - 1)

    def names(self) -> Tuple[str, ...]:
        names: List[str] = []
        for i, a in enumerate(self.inst.A, start=1):
            names.append(f"s{i}")
            names.extend(f"e{i}_{j}" for j in range(1, a + 1))
        names.extend(f"t{l}" for l in range(1, self.inst.m + 1))
        names.extend(f"x{i}_{j}" for i in range(1, self.rows + 1) for j in range(1, self.params.p + 1))
        return tuple(names)

    def edges(self) -> Iterator[SignedEdge]:
        inst, params = self.inst, self.params
        for i, a in enumerate(inst.A, start=1):
            for j in range(1, a + 1):
                yield self.s(i), self.e(i, j), Sign.POSITIVE
        for l1, l2 in combinations(range(1, inst.m + 1), 2):
            yield self.t(l1), self.t(l2), Sign.NEGATIVE
        for i in range(1, self.rows + 1):
            for j1, j2 in combinations(range(1, params.p + 1), 2):
                yield self.x(i, j1), self.x(i, j2), Sign.NEGATIVE
        for j in range(1, params.p + 1):
            for i1, i2 in combinations(range(1, self.rows + 1), 2):
                yield self.x(i1, j), self.x(i2, j), Sign.POSITIVE
        for l in range(1, inst.m + 1):
            for i in range(inst.B + 1, self.rows + 1):
                yield self.t(l), self.x(i, 1), Sign.POSITIVE
        if params.connected:
            for i in range(1, 3 * inst.m + 1):
                yield self.x(self.rows, 1), self.s(i), Sign.POSITIVE


def _check_size(layout: GadgetLayout, extra: int, max_n: Optional[int]) -> None:
    limit = config.GADGET_MAX_N if max_n is None else max_n
    if layout.n + extra > limit:
        raise SizeGuardError("gadget construction", layout.n + extra, limit)


def build_H(inst: ThreePartitionInstance, params: ReductionParams, max_n: Optional[int] = None) -> Graph2EC:
    layout = GadgetLayout(inst, params)
    _check_size(layout, 0, max_n)
    logger.info(f"Building gadget with {layout.n} vertices ({params.comment()})")
    return Graph2EC(layout.n, tuple(layout.edges()), layout.names())


def build_H_prime(inst: ThreePartitionInstance, params: ReductionParams,
                  max_n: Optional[int] = None) -> nx.Graph:
    """Underlying graph of H(I) plus a vertex z adjacent to all of it."""
    layout = GadgetLayout(inst, params)
    _check_size(layout, 1, max_n)
    return add_apex(build_H(inst, params, max_n)).underlying()


def witness_coloring(inst: ThreePartitionInstance, params: ReductionParams,
                     sol: PartitionSolution) -> Tuple[MergePlan, Coloring]:
    """Merge plan and coloring on k(I) colors built from a 3-partition solution.

    Each s_j with j in group i goes into t_i; afterwards t_i's B leaves, in
    ascending (star, leaf) order, go into x_1_1 .. x_B_1 in turn.
    """
    sol.validate(inst)
    layout = GadgetLayout(inst, params)
    steps: List[MergeStep] = []
    for l, group in enumerate(sol.groups, start=1):
        for j in sorted(group):
            steps.append(MergeStep(layout.t(l), layout.s(j + 1)))
    for group in sol.groups:
        leaves = [layout.e(j + 1, leaf) for j in sorted(group) for leaf in range(1, inst.A[j] + 1)]
        for row, leaf in enumerate(leaves, start=1):
            steps.append(MergeStep(layout.x(row, 1), leaf))
    plan = MergePlan(tuple(steps))
    coloring = plan.to_coloring(layout.n)
    logger.debug(f"witness coloring uses {coloring.k} colors, expected {k_of(inst, params)}")
    return plan, coloring


def apex_reduction(G: nx.Graph) -> SignedClass:
    """Signed class of G plus a universal vertex, every edge positive."""
    return SignedClass.of(add_apex(Graph2EC.from_unsigned(G)))


def find_diamond(g: Graph2EC, max_n: Optional[int] = None) -> Optional[Tuple[VertexId, VertexId, VertexId, VertexId]]:
    """An induced K4 minus an edge as (u, v, w, x): uv the middle edge, w and x non-adjacent."""
    limit = config.DIAMOND_MAX_N if max_n is None else max_n
    if g.n > limit:
        raise SizeGuardError("diamond check", g.n, limit)
    adjacency = [g.adjacency(v) for v in range(g.n)]
    for u, v, _ in g.edges:
        common = adjacency[u] & adjacency[v]
        for w in iter_bits(common):
            others = common & ~adjacency[w] & ~(1 << w)
            if others:
                return u, v, w, lowest_bit(others)
    return None


def check_diamond_free(g: Graph2EC, max_n: Optional[int] = None) -> bool:
    return find_diamond(g, max_n) is None
