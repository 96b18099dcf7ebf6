#!/usr/bin/env python3
"""
3-partition instances, gadget size parameters and a brute-force solver.

Instance file format:

    3p <m> <B>
    a <value>        exactly 3m lines
"""

import logging
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import config
from core.exceptions import FormatError, InstanceError, SizeGuardError
from core.sgraph.formats import read_source

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThreePartitionInstance:
    """3m positive integers with B/4 < a_i < B/2 summing to m*B."""

    m: int
    B: int
    A: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'A', tuple(self.A))
        if self.m < 1:
            raise InstanceError(f"m must be at least 1, got {self.m}")
        if len(self.A) != 3 * self.m:
            raise InstanceError(f"expected {3 * self.m} values, got {len(self.A)}")
        for i, a in enumerate(self.A):
            if not 4 * a > self.B or not 2 * a < self.B:
                raise InstanceError(f"a_{i + 1} = {a} is not strictly between B/4 and B/2 (B = {self.B})")
        if sum(self.A) != self.m * self.B:
            raise InstanceError(f"values sum to {sum(self.A)}, expected m*B = {self.m * self.B}")

    @property
    def normalized(self) -> bool:
        return all(a > self.m for a in self.A)

    def scaled(self, factor: int) -> 'ThreePartitionInstance':
        return ThreePartitionInstance(self.m, self.B * factor, tuple(a * factor for a in self.A))


def normalize_instance(inst: ThreePartitionInstance) -> ThreePartitionInstance:
    """Scale by m + 1 when some value is at most m; solutions are unchanged."""
    if inst.normalized:
        return inst
    logger.warning(f"instance has values <= m = {inst.m}; scaling by {inst.m + 1}")
    return inst.scaled(inst.m + 1)


@dataclass(frozen=True)
class ReductionParams:
    q: int
    r: int
    p: int
    connected: bool = False

    def __post_init__(self):
        if self.q < 0 or self.r < 0:
            raise InstanceError(f"q and r must be non-negative, got q={self.q}, r={self.r}")
        if self.r + self.q < 1:
            raise InstanceError("r + q must be at least 1")
        if self.p < 2:
            raise InstanceError(f"p must be at least 2, got {self.p}")

    def rows(self, inst: ThreePartitionInstance) -> int:
        """Grid rows: B + r + q."""
        return inst.B + self.r + self.q

    def comment(self) -> str:
        return f"q={self.q} r={self.r} p={self.p} connected={str(self.connected).lower()}"


def default_params(inst: ThreePartitionInstance, connected: bool = False) -> ReductionParams:
    """q, then r, then p from their closed forms; the connected variant bumps q and r first."""
    m, B = inst.m, inst.B
    q = 6 * m + 2 * B * m
    if connected:
        q += 1
    r = comb(m, 2) + q * m + 1
    if connected:
        r += 3 * m
    p = 2 * comb(m, 2) + 2 * m * (B + r + q) + q + 1
    return ReductionParams(q, r, p, connected)


def parse_params_override(text: str, connected: bool = False) -> ReductionParams:
    """Read 'q,r,p' as given on the command line."""
    try:
        q, r, p = (int(x) for x in text.split(','))
    except ValueError:
        raise InstanceError(f"expected 'q,r,p', got {text!r}") from None
    return ReductionParams(q, r, p, connected)


def k_of(inst: ThreePartitionInstance, params: ReductionParams, primed: bool = False) -> int:
    """m + p(B + r + q), plus one for the apex variant."""
    k = inst.m + params.p * params.rows(inst)
    return k + 1 if primed else k


@dataclass(frozen=True)
class PartitionSolution:
    """m triples of 0-based indices into A."""

    groups: Tuple[Tuple[int, int, int], ...]

    @classmethod
    def of(cls, groups: Sequence[Sequence[int]]) -> 'PartitionSolution':
        return cls(tuple(tuple(sorted(g)) for g in groups))

    def validate(self, inst: ThreePartitionInstance) -> 'PartitionSolution':
        if len(self.groups) != inst.m:
            raise InstanceError(f"expected {inst.m} groups, got {len(self.groups)}")
        used = sorted(i for group in self.groups for i in group)
        if used != list(range(3 * inst.m)):
            raise InstanceError("groups do not partition the indices of A")
        for i, group in enumerate(self.groups):
            if len(group) != 3:
                raise InstanceError(f"group {i} has {len(group)} elements, expected 3")
            total = sum(inst.A[j] for j in group)
            if total != inst.B:
                raise InstanceError(f"group {i} sums to {total}, expected {inst.B}")
        return self


def brute_force_3partition(inst: ThreePartitionInstance,
                           max_m: Optional[int] = None) -> Optional[PartitionSolution]:
    """Any solution of inst, or None; groups come out in order of their smallest index."""
    limit = config.THREE_PARTITION_MAX_M if max_m is None else max_m
    if inst.m > limit:
        raise SizeGuardError("3-partition brute force", inst.m, limit)

    def solve(free: List[int]) -> Optional[List[Tuple[int, int, int]]]:
        if not free:
            return []
        first, rest = free[0], free[1:]
        for x in range(len(rest)):
            for y in range(x + 1, len(rest)):
                i, j = rest[x], rest[y]
                if inst.A[first] + inst.A[i] + inst.A[j] != inst.B:
                    continue
                tail = solve([v for v in rest if v not in (i, j)])
                if tail is not None:
                    return [(first, i, j)] + tail
        return None

    groups = solve(list(range(3 * inst.m)))
    return PartitionSolution.of(groups) if groups is not None else None


def parse_instance(text: str) -> ThreePartitionInstance:
    header: Optional[Tuple[int, int]] = None
    values: List[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if header is None:
                if tokens[0] != '3p' or len(tokens) != 3:
                    raise FormatError("expected header '3p <m> <B>'", line_no)
                header = (int(tokens[1]), int(tokens[2]))
            elif tokens[0] == 'a' and len(tokens) == 2:
                values.append(int(tokens[1]))
            else:
                raise FormatError("expected 'a <value>'", line_no)
        except FormatError:
            raise
        except ValueError:
            raise FormatError(f"not an integer in {line!r}", line_no) from None
    if header is None:
        raise FormatError("missing header '3p <m> <B>'")
    try:
        return ThreePartitionInstance(header[0], header[1], tuple(values))
    except InstanceError as e:
        raise FormatError(str(e)) from None


def serialize_instance(inst: ThreePartitionInstance) -> str:
    lines = [f"3p {inst.m} {inst.B}"] + [f"a {a}" for a in inst.A]
    return "\n".join(lines) + "\n"


def read_instance(path: Union[str, Path]) -> ThreePartitionInstance:
    logger.info(f"Reading 3-partition instance from {path}")
    return parse_instance(read_source(path))


def write_instance(path: Union[str, Path], inst: ThreePartitionInstance) -> None:
    Path(path).write_text(serialize_instance(inst), encoding='utf-8')
