#!/usr/bin/env python3
"""
Core data types for 2-edge-colored graphs.

A Graph2EC is an immutable simple graph on dense vertex ids 0..n-1 where
every edge carries a Sign. The negative edges form the signature C of
(G, C). Neighbourhoods are kept as int bitmasks, split by sign, so that
pair checks reduce to a few AND/OR operations.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from core.exceptions import GraphError
from core.sgraph.bits import iter_bits, mask_of

VertexId = int
Edge = Tuple[VertexId, VertexId]


class Sign(Enum):
    """Sign of an edge; the product of two signs follows the usual rule."""

    POSITIVE = '+'
    NEGATIVE = '-'

    def __mul__(self, other: 'Sign') -> 'Sign':
        return Sign.POSITIVE if self is other else Sign.NEGATIVE

    def flipped(self) -> 'Sign':
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def parse(cls, token: Union[str, 'Sign']) -> 'Sign':
        if isinstance(token, Sign):
            return token
        if token == '+':
            return cls.POSITIVE
        if token == '-':
            return cls.NEGATIVE
        raise GraphError(f"unknown sign token {token!r} (expected '+' or '-')")


class Balance(Enum):
    BALANCED = 'balanced'
    UNBALANCED = 'unbalanced'


def default_name(v: VertexId) -> str:
    return f"v{v}"


@dataclass(frozen=True)
class Graph2EC:
    """A simple graph with one sign on every edge.

    Edges are given as (u, v, sign) triples in any orientation; they are
    stored sorted by (min id, max id). Loops, duplicate edges and digons
    (the same pair with both signs) are rejected.
    """

    n: int
    edges: Tuple[Tuple[VertexId, VertexId, Sign], ...] = ()
    names: Tuple[str, ...] = ()
    absorbed: Tuple[Tuple[str, ...], ...] = field(default=(), compare=False, repr=False)

    pos: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    neg: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    _signs: Dict[Edge, Sign] = field(init=False, compare=False, repr=False)
    _index: Dict[str, VertexId] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")

        names = tuple(self.names) if self.names else tuple(default_name(v) for v in range(n))
        if len(names) != n:
            raise GraphError(f"expected {n} vertex names, got {len(names)}")
        index: Dict[str, VertexId] = {}
        for v, name in enumerate(names):
            if not name or any(ch.isspace() for ch in name) or '#' in name:
                raise GraphError(f"illegal vertex name {name!r}")
            if name in index:
                raise GraphError(f"duplicate vertex name {name!r}")
            index[name] = v

        signs: Dict[Edge, Sign] = {}
        for u, v, s in self.edges:
            s = Sign.parse(s)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references an unknown vertex")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in signs:
                if signs[key] is not s:
                    raise GraphError(f"digon between {key[0]} and {key[1]}")
                raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
            signs[key] = s

        pos_ids: List[List[int]] = [[] for _ in range(n)]
        neg_ids: List[List[int]] = [[] for _ in range(n)]
        for (u, v), s in signs.items():
            side = pos_ids if s is Sign.POSITIVE else neg_ids
            side[u].append(v)
            side[v].append(u)

        absorbed = tuple(self.absorbed) if self.absorbed else tuple(() for _ in range(n))
        if len(absorbed) != n:
            raise GraphError(f"expected {n} absorbed-name entries, got {len(absorbed)}")

        object.__setattr__(self, 'edges', tuple((u, v, signs[(u, v)]) for u, v in sorted(signs)))
        object.__setattr__(self, 'names', names)
        object.__setattr__(self, 'absorbed', absorbed)
        object.__setattr__(self, 'pos', tuple(mask_of(ids, n) for ids in pos_ids))
        object.__setattr__(self, 'neg', tuple(mask_of(ids, n) for ids in neg_ids))
        object.__setattr__(self, '_signs', signs)
        object.__setattr__(self, '_index', index)

    # ------------------------------------------------------------------
    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[VertexId, VertexId, Union[str, Sign]]],
                   names: Optional[Sequence[str]] = None) -> 'Graph2EC':
        return cls(n, tuple((u, v, Sign.parse(s)) for u, v, s in edges), tuple(names or ()))

    @classmethod
    def from_named_edges(cls, names: Sequence[str],
                         edges: Iterable[Tuple[str, str, Union[str, Sign]]]) -> 'Graph2EC':
        """Build a graph from edges given by vertex names."""
        index = {name: v for v, name in enumerate(names)}
        try:
            triples = tuple((index[a], index[b], Sign.parse(s)) for a, b, s in edges)
        except KeyError as e:
            raise GraphError(f"unknown vertex name {e.args[0]!r}") from None
        return cls(len(names), triples, tuple(names))

    @classmethod
    def from_unsigned(cls, graph: nx.Graph, negative: Iterable[Edge] = ()) -> 'Graph2EC':
        """Sign a networkx graph: the listed edges negative, all others positive.

        Nodes are relabelled 0..n-1 in sorted order; a node's 'name'
        attribute (or its str()) becomes its vertex name.
        """
        nodes = sorted(graph.nodes())
        ids = {node: v for v, node in enumerate(nodes)}
        names = tuple(str(graph.nodes[node].get('name', node)) for node in nodes)
        neg = {frozenset((ids[a], ids[b])) for a, b in negative}
        edges = tuple(
            (ids[a], ids[b], Sign.NEGATIVE if frozenset((ids[a], ids[b])) in neg else Sign.POSITIVE)
            for a, b in graph.edges()
        )
        return cls(len(nodes), edges, names)

    def with_edges(self, edges: Iterable[Tuple[VertexId, VertexId, Sign]]) -> 'Graph2EC':
        """Same vertices and names, new edge set."""
        return Graph2EC(self.n, tuple(edges), self.names, self.absorbed)

    # ------------------------------------------------------------------
    # queries

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: VertexId) -> VertexId:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"unknown vertex id {v!r}")
        return v

    def check_pair(self, u: VertexId, v: VertexId) -> None:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise GraphError(f"expected two distinct vertices, got {u} twice")

    def name(self, v: VertexId) -> str:
        return self.names[self.check_vertex(v)]

    def index(self, name: str) -> VertexId:
        try:
            return self._index[name]
        except KeyError:
            raise GraphError(f"unknown vertex name {name!r}") from None

    def sign(self, u: VertexId, v: VertexId) -> Optional[Sign]:
        return self._signs.get((u, v) if u < v else (v, u))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return ((self.pos[u] | self.neg[u]) >> v) & 1 == 1

    def adjacency(self, v: VertexId) -> int:
        return self.pos[v] | self.neg[v]

    def neighbors(self, v: VertexId) -> List[VertexId]:
        return list(iter_bits(self.adjacency(self.check_vertex(v))))

    def degree(self, v: VertexId) -> int:
        return bin(self.adjacency(v)).count('1')

    def iter_edges(self) -> Iterator[Tuple[VertexId, VertexId, Sign]]:
        return iter(self.edges)

    def negative_edges(self) -> FrozenSet[Edge]:
        return frozenset((u, v) for u, v, s in self.edges if s is Sign.NEGATIVE)

    def underlying_edges(self) -> FrozenSet[Edge]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def same_underlying(self, other: 'Graph2EC') -> bool:
        return self.n == other.n and self.underlying_edges() == other.underlying_edges()

    def underlying(self) -> nx.Graph:
        """The unsigned underlying graph, with vertex names as node attributes."""
        graph = nx.Graph()
        graph.add_nodes_from((v, {'name': self.names[v]}) for v in range(self.n))
        graph.add_edges_from((u, v, {'sign': s}) for u, v, s in self.edges)
        return graph

    def components(self) -> List[List[VertexId]]:
        """Connected components as ascending id lists, ordered by smallest id."""
        comps = [sorted(c) for c in nx.connected_components(self.underlying())]
        return sorted(comps, key=lambda c: c[0])

    def delete_vertex(self, v: VertexId) -> 'Graph2EC':
        """Remove v; vertices above v shift down by one id."""
        self.check_vertex(v)
        shift = lambda w: w - 1 if w > v else w  # noqa: E731
        edges = tuple((shift(a), shift(b), s) for a, b, s in self.edges if v not in (a, b))
        names = self.names[:v] + self.names[v + 1:]
        absorbed = self.absorbed[:v] + self.absorbed[v + 1:]
        return Graph2EC(self.n - 1, edges, names, absorbed)

    def rename(self, names: Sequence[str]) -> 'Graph2EC':
        return Graph2EC(self.n, self.edges, tuple(names))


@dataclass(frozen=True)
class SwitchingSet:
    """A set of vertices to re-sign at."""

    members: FrozenSet[VertexId] = frozenset()

    @classmethod
    def of(cls, vertices: Iterable[VertexId] = ()) -> 'SwitchingSet':
        return cls(frozenset(vertices))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[VertexId]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def mask(self) -> int:
        return mask_of(self.members, max(self.members, default=0) + 1)

    def validate(self, g: Graph2EC) -> 'SwitchingSet':
        for v in self.members:
            g.check_vertex(v)
        return self

    def compose(self, other: 'SwitchingSet') -> 'SwitchingSet':
        """Switching by self then other equals switching by the symmetric difference."""
        return SwitchingSet(self.members ^ other.members)

    def complement(self, n: int) -> 'SwitchingSet':
        return SwitchingSet(frozenset(range(n)) - self.members)

    def canonical(self, g: Graph2EC) -> 'SwitchingSet':
        """Equivalent set that never contains the smallest vertex of a component."""
        members = set(self.members)
        for comp in g.components():
            if comp[0] in members:
                members.symmetric_difference_update(comp)
        return SwitchingSet(frozenset(members))


@dataclass(frozen=True)
class PathWitness:
    """A path given by its vertex sequence, with the product of its edge signs."""

    vertices: Tuple[VertexId, ...]
    sign: Sign

    @classmethod
    def on(cls, g: Graph2EC, vertices: Sequence[VertexId]) -> 'PathWitness':
        vertices = tuple(vertices)
        if len(vertices) < 2 or len(set(vertices)) != len(vertices):
            raise GraphError(f"{vertices} is not a path")
        return cls(vertices, _walk_sign(g, vertices))

    @property
    def unbalanced(self) -> bool:
        return self.sign is Sign.NEGATIVE


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given by its vertex sequence (the closing edge is implicit)."""

    vertices: Tuple[VertexId, ...]
    sign: Sign

    @classmethod
    def on(cls, g: Graph2EC, vertices: Sequence[VertexId]) -> 'CycleWitness':
        vertices = tuple(vertices)
        if len(vertices) < 3 or len(set(vertices)) != len(vertices):
            raise GraphError(f"{vertices} is not a cycle")
        return cls(vertices, _walk_sign(g, vertices + vertices[:1]))

    @property
    def balance(self) -> Balance:
        return Balance.UNBALANCED if self.sign is Sign.NEGATIVE else Balance.BALANCED


def _walk_sign(g: Graph2EC, walk: Sequence[VertexId]) -> Sign:
    product = Sign.POSITIVE
    for a, b in zip(walk, walk[1:]):
        g.check_vertex(a)
        g.check_vertex(b)
        s = g.sign(a, b)
        if s is None:
            raise GraphError(f"vertices {a} and {b} are not adjacent")
        product = product * s
    return product
