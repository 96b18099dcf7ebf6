#!/usr/bin/env python3
"""
Colorings and merge plans: the two ways a surjective homomorphism is written down.

A Coloring maps every vertex onto {1..k} (surjectively), optionally with the
SwitchingSet applied first in the signed setting. A MergePlan lists the
vertex identifications one at a time.

Coloring file format:

    c <vertexname> <color>        one line per vertex
    switch <name1> <name2> ...    optional, signed colorings only
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import FormatError, GraphError, InvalidColoringError
from core.sgraph.formats import read_source
from core.sgraph.graph import Graph2EC, SwitchingSet, VertexId

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """Surjective map vertex -> {1..k}; colors[v] is the color of vertex v."""

    colors: Tuple[int, ...]
    k: int
    switching: Optional[SwitchingSet] = None

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, 'colors', colors)
        if any(not isinstance(c, int) or c < 1 or c > self.k for c in colors):
            raise InvalidColoringError(f"colors must lie in 1..{self.k}")
        if len(set(colors)) != self.k:
            raise InvalidColoringError(f"coloring is not surjective onto 1..{self.k}")

    @classmethod
    def from_labels(cls, labels: Sequence[object],
                    switching: Optional[SwitchingSet] = None) -> 'Coloring':
        """Number arbitrary class labels 1, 2, ... in order of first occurrence."""
        numbering: Dict[object, int] = {}
        colors = [numbering.setdefault(label, len(numbering) + 1) for label in labels]
        return cls(tuple(colors), len(numbering), switching)

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[VertexId]], n: int,
                     switching: Optional[SwitchingSet] = None) -> 'Coloring':
        """Color class i (0-based) gets color i + 1; every vertex must be covered once."""
        colors: List[Optional[int]] = [None] * n
        k = 0
        for k, members in enumerate(classes, start=1):
            for v in members:
                if not 0 <= v < n or colors[v] is not None:
                    raise InvalidColoringError(f"vertex {v} is out of range or colored twice")
                colors[v] = k
        if any(c is None for c in colors):
            raise InvalidColoringError("some vertices received no color")
        return cls(tuple(colors), k, switching)

    @classmethod
    def identity(cls, n: int, switching: Optional[SwitchingSet] = None) -> 'Coloring':
        return cls(tuple(range(1, n + 1)), n, switching)

    @property
    def n(self) -> int:
        return len(self.colors)

    def classes(self) -> List[List[VertexId]]:
        """Members of each color class; index i holds color i + 1."""
        classes: List[List[VertexId]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            classes[c - 1].append(v)
        return classes

    def as_map(self) -> Tuple[VertexId, ...]:
        """The induced vertex map onto quotient ids 0..k-1."""
        return tuple(c - 1 for c in self.colors)

    def with_switching(self, switching: Optional[SwitchingSet]) -> 'Coloring':
        return Coloring(self.colors, self.k, switching)

    def check_graph(self, g: Graph2EC) -> None:
        if self.n != g.n:
            raise InvalidColoringError(f"coloring covers {self.n} vertices, graph has {g.n}")
        if self.switching is not None:
            self.switching.validate(g)


@dataclass(frozen=True)
class MergeStep:
    keep: VertexId
    drop: VertexId
    pre_switch: SwitchingSet = SwitchingSet()


@dataclass(frozen=True)
class MergePlan:
    """Ordered identifications, each naming two vertices of the original graph.

    Both vertices of a step must still be live (not dropped by an earlier
    step); the drop vertex joins the keep vertex's class.
    """

    steps: Tuple[MergeStep, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Tuple[VertexId, VertexId]]) -> 'MergePlan':
        return cls(tuple(MergeStep(keep, drop) for keep, drop in pairs))

    def __len__(self) -> int:
        return len(self.steps)

    def validate(self, n: int) -> None:
        dropped = set()
        for i, step in enumerate(self.steps):
            for v in (step.keep, step.drop):
                if not 0 <= v < n:
                    raise GraphError(f"step {i}: unknown vertex id {v}")
                if v in dropped:
                    raise GraphError(f"step {i}: vertex {v} was already merged away")
            if step.keep == step.drop:
                raise GraphError(f"step {i}: cannot merge vertex {step.keep} with itself")
            dropped.add(step.drop)

    def to_coloring(self, n: int, switching: Optional[SwitchingSet] = None) -> Coloring:
        """The coloring whose classes are the merged groups."""
        self.validate(n)
        owner = list(range(n))
        for step in self.steps:
            owner[step.drop] = step.keep
        roots = []
        for v in range(n):
            r = v
            while owner[r] != r:
                r = owner[r]
            roots.append(r)
        return Coloring.from_labels(roots, switching)


def parse_coloring(text: str, g: Graph2EC) -> Coloring:
    """Parse a coloring file against the vertex names of g."""
    colors: Dict[VertexId, int] = {}
    switching: Optional[SwitchingSet] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            if tokens[0] == 'c':
                if len(tokens) != 3:
                    raise FormatError("expected 'c <vertexname> <color>'", line_no)
                v = g.index(tokens[1])
                if v in colors:
                    raise FormatError(f"vertex {tokens[1]!r} colored twice", line_no)
                try:
                    colors[v] = int(tokens[2])
                except ValueError:
                    raise FormatError(f"color {tokens[2]!r} is not an integer", line_no) from None
            elif tokens[0] == 'switch':
                if switching is not None:
                    raise FormatError("more than one 'switch' line", line_no)
                switching = SwitchingSet.of(g.index(name) for name in tokens[1:])
            else:
                raise FormatError(f"unknown line type {tokens[0]!r}", line_no)
        except FormatError:
            raise
        except GraphError as e:
            raise FormatError(str(e), line_no) from None

    missing = [g.names[v] for v in range(g.n) if v not in colors]
    if missing:
        raise FormatError(f"no color given for {', '.join(missing[:5])}")
    k = max(colors.values(), default=0)
    try:
        return Coloring(tuple(colors[v] for v in range(g.n)), k, switching)
    except InvalidColoringError as e:
        raise FormatError(str(e)) from None


def serialize_coloring(col: Coloring, g: Graph2EC) -> str:
    col.check_graph(g)
    lines = [f"c {g.names[v]} {c}" for v, c in enumerate(col.colors)]
    if col.switching is not None:
        lines.append(" ".join(["switch"] + [g.names[v] for v in col.switching]))
    return "\n".join(lines) + "\n"


def read_coloring(path: Union[str, Path], g: Graph2EC) -> Coloring:
    return parse_coloring(read_source(path), g)


def write_coloring(path: Union[str, Path], col: Coloring, g: Graph2EC) -> None:
    Path(path).write_text(serialize_coloring(col, g), encoding='utf-8')
    logger.info(f"Saved {col.k}-coloring to: {path}")
