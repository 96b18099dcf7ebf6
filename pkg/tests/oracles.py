"""Brute-force reference implementations, written straight from the definitions.

Nothing here uses bitmasks, canonical representatives or pruning, so the
tests can compare the real code against something independent.
"""

from itertools import combinations
from typing import FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from core.sgraph.graph import Graph2EC, Sign


def subsets(n: int) -> Iterator[FrozenSet[int]]:
    for mask in range(1 << n):
        yield frozenset(v for v in range(n) if mask >> v & 1)


def resign(g: Graph2EC, s: FrozenSet[int]) -> Graph2EC:
    return g.with_edges(
        (u, v, sign.flipped() if (u in s) != (v in s) else sign) for u, v, sign in g.edges
    )


def labelings(n: int) -> Iterator[Tuple[int, ...]]:
    """Every restricted-growth string of length n, in lexicographic order."""
    def extend(prefix: List[int], k: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(k + 1):
            yield from extend(prefix + [c], max(k, c + 1))
    yield from extend([], 0)


# ----------------------------------------------------------------------
# switching

def brute_equivalent(g1: Graph2EC, g2: Graph2EC) -> bool:
    """Some vertex set's cut is exactly the set of edges whose sign differs."""
    differ = {(u, v) for u, v, s in g1.edges if g2.sign(u, v) is not s}
    for s in subsets(g1.n):
        cut = {(u, v) for u, v, _ in g1.edges if (u in s) != (v in s)}
        if cut == differ:
            return True
    return False


def balanced_cycles(g: Graph2EC) -> FrozenSet[FrozenSet[Tuple[int, int]]]:
    """Edge sets of all cycles with an even number of negative edges."""
    found = set()
    for cycle in nx.simple_cycles(g.underlying()):
        if len(cycle) < 3:
            continue
        edges = [(min(a, b), max(a, b)) for a, b in zip(cycle, cycle[1:] + cycle[:1])]
        negatives = sum(1 for a, b in edges if g.sign(a, b) is Sign.NEGATIVE)
        if negatives % 2 == 0:
            found.add(frozenset(edges))
    return frozenset(found)


# ----------------------------------------------------------------------
# identifiability and cliques

def brute_identifiable_2ec(g: Graph2EC, u: int, v: int) -> bool:
    if g.has_edge(u, v):
        return False
    for w in range(g.n):
        su, sv = g.sign(u, w), g.sign(w, v)
        if su is not None and sv is not None and su is not sv:
            return False
    return True


def brute_identifiable_signed(g: Graph2EC, u: int, v: int) -> bool:
    return any(brute_identifiable_2ec(resign(g, s), u, v) for s in subsets(g.n))


def brute_is_2ec_clique(g: Graph2EC) -> bool:
    return not any(brute_identifiable_2ec(g, u, v) for u, v in combinations(range(g.n), 2))


def brute_is_signed_clique(g: Graph2EC) -> bool:
    return not any(brute_identifiable_signed(g, u, v) for u, v in combinations(range(g.n), 2))


# ----------------------------------------------------------------------
# colorings

def brute_quotient(g: Graph2EC, labels: Tuple[int, ...]) -> Optional[Graph2EC]:
    """Image graph of a coloring, or None when it is not a homomorphism."""
    k = max(labels, default=-1) + 1
    signs = {}
    for u, v, s in g.edges:
        a, b = labels[u], labels[v]
        if a == b:
            return None
        key = (min(a, b), max(a, b))
        if signs.setdefault(key, s) is not s:
            return None
    return Graph2EC(k, tuple((a, b, s) for (a, b), s in signs.items()))


def brute_best(g: Graph2EC, maximize: bool, clique: Optional[str]) -> Optional[int]:
    """Best class count over all partitions; clique is None, '2ec' or 'signed'.

    None when no partition qualifies (some signatures have no complete
    signed coloring at all).
    """
    best = None
    for labels in labelings(g.n):
        k = max(labels, default=-1) + 1
        if best is not None and (k <= best if maximize else k >= best):
            continue
        image = brute_quotient(g, labels)
        if image is None:
            continue
        if clique == '2ec' and not brute_is_2ec_clique(image):
            continue
        if clique == 'signed' and not brute_is_signed_clique(image):
            continue
        best = image.n
    return best


def brute_psi2(g: Graph2EC) -> int:
    return brute_best(g, True, '2ec')


def brute_chi2(g: Graph2EC) -> int:
    return brute_best(g, False, None)


def _switchings(n: int) -> Iterator[FrozenSet[int]]:
    # a set and its complement re-sign identically, so vertex 0 is never switched
    return (s for s in subsets(n) if 0 not in s)


def brute_psis(g: Graph2EC) -> int:
    values = [brute_best(resign(g, s), True, 'signed') for s in _switchings(g.n)]
    return max(v for v in values if v is not None)


def brute_chis(g: Graph2EC) -> int:
    return min(brute_chi2(resign(g, s)) for s in _switchings(g.n))


def brute_psi_max_class(g: Graph2EC) -> int:
    return max(brute_psi2(resign(g, s)) for s in _switchings(g.n))


# ----------------------------------------------------------------------
# exhaustive families

def all_signatures(max_n: int) -> Iterator[Graph2EC]:
    """Every signature of every graph on at most max_n vertices, up to isomorphism."""
    for graph in nx.graph_atlas_g():
        if graph.number_of_nodes() > max_n:
            break
        edges = sorted((min(a, b), max(a, b)) for a, b in graph.edges())
        for mask in range(1 << len(edges)):
            yield Graph2EC(graph.number_of_nodes(), tuple(
                (u, v, Sign.NEGATIVE if mask >> i & 1 else Sign.POSITIVE)
                for i, (u, v) in enumerate(edges)
            ))
