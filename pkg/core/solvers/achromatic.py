#!/usr/bin/env python3
"""
Exact achromatic and chromatic parameters of small 2-edge-colored and signed graphs.

Every parameter is a best partition (see partitions.PartitionSearch) taken
over an outer family: one graph, the members of a switching class, all
signatures of an underlying graph, or one signature per switching class.
Outer families are split across workers; ties go to the lowest outer index
and then the lexicographically smallest partition, so the witness does not
depend on the worker count.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

import networkx as nx

import config
from core.cliques.cliques import is_2ec_clique, is_signed_clique
from core.exceptions import SizeGuardError
from core.morphism.coloring import Coloring
from core.morphism.quotient import quotient
from core.sgraph.graph import Graph2EC, Sign, SwitchingSet
from core.sgraph.switching import SignedClass, apply_switching
from core.solvers.partitions import (
    COMPLETE_2EC, COMPLETE_SIGNED, MAXIMIZE, MINIMIZE, Labels, PartitionSearch,
)
from core.utils.parallel import run_chunks

logger = logging.getLogger(__name__)

# param name -> (setting, complete)
PARAMS = {
    'psi': ('2ec', True),
    'psi2': ('2ec', True),
    'psis': ('signed', True),
    'psi-max-class': ('2ec', True),
    'psi-min-class': ('2ec', True),
    'psi-max': ('2ec', True),
    'psi-min': ('2ec', True),
    'psi-max-signed': ('signed', True),
    'psi-min-signed': ('signed', True),
    'chi2': ('2ec', False),
    'chis': ('signed', False),
}

AnyGraph = Union[Graph2EC, nx.Graph]


@dataclass(frozen=True)
class ParamResult:
    """Value of a parameter with its witness.

    coloring is stated against graph (re-signed at coloring.switching first,
    when present); certificate is the quotient it produces.
    """

    param: str
    value: int
    coloring: Coloring
    graph: Graph2EC
    certificate: Optional[Graph2EC] = None

    @property
    def witness_graph(self) -> Graph2EC:
        if self.coloring.switching:
            return apply_switching(self.graph, self.coloring.switching)
        return self.graph

    def verify(self) -> bool:
        """Re-derive the value from the witness alone."""
        setting, complete = PARAMS[self.param]
        if self.coloring.k != self.value:
            return False
        image = quotient(self.graph, self.coloring)
        if not image.ok:
            return False
        if not complete:
            return True
        if setting == 'signed':
            return is_signed_clique(SignedClass.of(image.graph), max_n=image.graph.n)
        return is_2ec_clique(image.graph, max_n=image.graph.n)


def _guard(what: str, actual: int, limit: int, override: Optional[int]) -> None:
    limit = limit if override is None else override
    if actual > limit:
        raise SizeGuardError(what, actual, limit)


def _as_graph(G: AnyGraph) -> Graph2EC:
    return Graph2EC.from_unsigned(G) if isinstance(G, nx.Graph) else G


def _result(param: str, value: int, labels: Labels, graph: Graph2EC,
            switching: Optional[SwitchingSet] = None) -> ParamResult:
    coloring = Coloring.from_labels(labels, switching)
    image = quotient(graph, coloring)
    return ParamResult(param, value, coloring, graph, image.graph)


# ----------------------------------------------------------------------
# outer families

def free_vertices(g: Graph2EC) -> List[int]:
    """Vertices that may be switched: all but the smallest of each component."""
    roots = {comp[0] for comp in g.components()}
    return [v for v in range(g.n) if v not in roots]


def switching_at(free: Sequence[int], index: int) -> SwitchingSet:
    """The switching whose members are the free vertices picked by the bits of index."""
    return SwitchingSet.of(v for i, v in enumerate(free) if index >> i & 1)


def signature_at(g: Graph2EC, free_edges: Sequence[Tuple[int, int]], index: int) -> Graph2EC:
    """g with the free edges picked by the bits of index negative and all others positive."""
    negative = {free_edges[i] for i in range(len(free_edges)) if index >> i & 1}
    return g.with_edges(
        (u, v, Sign.NEGATIVE if (u, v) in negative else Sign.POSITIVE) for u, v, _ in g.edges
    )


def cotree_edges(g: Graph2EC) -> List[Tuple[int, int]]:
    """Edges outside the lowest-id BFS spanning forest, sorted."""
    graph = g.underlying()
    tree = set()
    for comp in g.components():
        for a, b in nx.bfs_edges(graph, comp[0], sort_neighbors=sorted):
            tree.add((min(a, b), max(a, b)))
    return [(u, v) for u, v, _ in g.edges if (u, v) not in tree]


Best = Optional[Tuple[int, int, object]]


def _extremum(count: int, evaluate: Callable[[int, Optional[int]], Optional[Tuple[int, object]]],
              maximize: bool, share_bound: bool, workers: Optional[int], progress: bool,
              desc: str) -> Best:
    """Best (value, index, payload) over outer indices 0..count-1.

    evaluate(index, bound) returns (value, payload) strictly better than
    bound, or None. With share_bound each chunk passes its best so far;
    otherwise evaluate is called with None and must be exact. None comes
    back only when every evaluation was pruned.
    """

    def better(value: int, than: Optional[int]) -> bool:
        if than is None:
            return True
        return value > than if maximize else value < than

    def work(chunk: Sequence[int]) -> Best:
        best: Best = None
        for index in chunk:
            bound = best[0] if (share_bound and best is not None) else None
            found = evaluate(index, bound)
            if found is not None and better(found[0], best[0] if best else None):
                best = (found[0], index, found[1])
        return best

    found = [b for b in run_chunks(range(count), work, workers=workers, progress=progress, desc=desc)
             if b is not None]
    if not found:
        return None
    if maximize:
        return max(found, key=lambda b: (b[0], -b[1]))
    return min(found, key=lambda b: (b[0], b[1]))


def _search(g: Graph2EC, goal: str, complete: Optional[str], bound: Optional[int] = None):
    return PartitionSearch(g, goal, complete).run(bound)


def _over_switchings(rep: Graph2EC, goal: str, complete: Optional[str], bound: Optional[int],
                     workers: Optional[int] = 1, progress: bool = False):
    """Best partition over the re-signings of rep; returns (value, switching, labels) or None."""
    free = free_vertices(rep)
    maximize = goal == MAXIMIZE

    def evaluate(index: int, local: Optional[int]):
        limits = [b for b in (bound, local) if b is not None]
        tightest = (max(limits) if maximize else min(limits)) if limits else None
        return _search(apply_switching(rep, switching_at(free, index)), goal, complete, tightest)

    best = _extremum(1 << len(free), evaluate, maximize, True, workers, progress, "Switchings")
    if best is None:
        return None
    value, index, labels = best
    return value, switching_at(free, index), labels


# ----------------------------------------------------------------------
# completeness checks

def verify_complete_2ec(g: Graph2EC, col: Coloring) -> bool:
    """True iff col is a valid coloring whose quotient is a 2-edge-colored clique."""
    image = quotient(g, col)
    return image.ok and is_2ec_clique(image.graph)


def verify_complete_signed(sc: Union[SignedClass, Graph2EC], col: Coloring) -> bool:
    """As verify_complete_2ec in the signed setting.

    col.switching is read against the representative when a SignedClass is
    given, and against the graph itself otherwise.
    """
    g = sc.representative if isinstance(sc, SignedClass) else sc
    image = quotient(g, col)
    return image.ok and is_signed_clique(SignedClass.of(image.graph))


# ----------------------------------------------------------------------
# single-graph parameters

def psi2(g: Graph2EC, max_n: Optional[int] = None) -> ParamResult:
    """Largest k admitting a complete k-coloring of g."""
    _guard("psi2", g.n, config.PSI2_MAX_N, max_n)
    value, labels = _search(g, MAXIMIZE, COMPLETE_2EC)
    return _result('psi2', value, labels, g)


def chi2(g: Graph2EC, max_n: Optional[int] = None) -> ParamResult:
    """Smallest k admitting a k-coloring of g."""
    _guard("chi2", g.n, config.PSI2_MAX_N, max_n)
    value, labels = _search(g, MINIMIZE, None)
    return _result('chi2', value, labels, g)


def psi_ordinary(G: AnyGraph, max_n: Optional[int] = None) -> ParamResult:
    """Classical achromatic number: psi2 of the all-positive signature."""
    g = _as_graph(G)
    g = g.with_edges((u, v, Sign.POSITIVE) for u, v, _ in g.edges)
    _guard("psi", g.n, config.PSI2_MAX_N, max_n)
    value, labels = _search(g, MAXIMIZE, COMPLETE_2EC)
    return _result('psi', value, labels, g)


def psis(sc: SignedClass, max_n: Optional[int] = None, workers: Optional[int] = None,
         progress: bool = False) -> ParamResult:
    """Largest order of a signed clique that sc maps onto."""
    rep = sc.representative
    _guard("psis", rep.n, config.PSIS_MAX_N, max_n)
    value, s, labels = _over_switchings(rep, MAXIMIZE, COMPLETE_SIGNED, None, workers, progress)
    logger.info(f"psis = {value} over {1 << len(free_vertices(rep))} switchings")
    return _result('psis', value, labels, rep, s)


def chi_s(sc: SignedClass, max_n: Optional[int] = None, workers: Optional[int] = None,
          progress: bool = False) -> ParamResult:
    """Smallest chromatic number over the members of sc."""
    rep = sc.representative
    _guard("chis", rep.n, config.PSIS_MAX_N, max_n)
    value, s, labels = _over_switchings(rep, MINIMIZE, None, None, workers, progress)
    return _result('chis', value, labels, rep, s)


# ----------------------------------------------------------------------
# extremes over families of signatures

def _psi2_over_class(sc: SignedClass, maximize: bool, max_n: Optional[int],
                     workers: Optional[int], progress: bool) -> ParamResult:
    rep = sc.representative
    param = 'psi-max-class' if maximize else 'psi-min-class'
    _guard(param, rep.n, config.CLASS_MAX_N, max_n)
    free = free_vertices(rep)

    def evaluate(index: int, bound: Optional[int]):
        return _search(apply_switching(rep, switching_at(free, index)), MAXIMIZE, COMPLETE_2EC, bound)

    value, index, labels = _extremum(1 << len(free), evaluate, maximize, maximize,
                                     workers, progress, "Class members")
    return _result(param, value, labels, rep, switching_at(free, index))


def psi_max_class(sc: SignedClass, max_n: Optional[int] = None, workers: Optional[int] = None,
                  progress: bool = False) -> ParamResult:
    return _psi2_over_class(sc, True, max_n, workers, progress)


def psi_min_class(sc: SignedClass, max_n: Optional[int] = None, workers: Optional[int] = None,
                  progress: bool = False) -> ParamResult:
    return _psi2_over_class(sc, False, max_n, workers, progress)


def _psi2_over_signatures(G: AnyGraph, maximize: bool, max_edges: Optional[int],
                          workers: Optional[int], progress: bool) -> ParamResult:
    g = _as_graph(G)
    param = 'psi-max' if maximize else 'psi-min'
    _guard(param, g.m, config.GRAPH_MAX_EDGES, max_edges)
    _guard(param, g.n, config.PSI2_MAX_N, None)
    edges = [(u, v) for u, v, _ in g.edges]

    def evaluate(index: int, bound: Optional[int]):
        return _search(signature_at(g, edges, index), MAXIMIZE, COMPLETE_2EC, bound)

    value, index, labels = _extremum(1 << len(edges), evaluate, maximize, maximize,
                                     workers, progress, "Signatures")
    return _result(param, value, labels, signature_at(g, edges, index))


def psi_max_graph(G: AnyGraph, max_edges: Optional[int] = None, workers: Optional[int] = None,
                  progress: bool = False) -> ParamResult:
    """Largest psi2 over all 2^|E| signatures of G."""
    return _psi2_over_signatures(G, True, max_edges, workers, progress)


def psi_min_graph(G: AnyGraph, max_edges: Optional[int] = None, workers: Optional[int] = None,
                  progress: bool = False) -> ParamResult:
    """Smallest psi2 over all 2^|E| signatures of G."""
    return _psi2_over_signatures(G, False, max_edges, workers, progress)


def _psis_over_classes(G: AnyGraph, maximize: bool, max_edges: Optional[int],
                       workers: Optional[int], progress: bool) -> ParamResult:
    g = _as_graph(G)
    param = 'psi-max-signed' if maximize else 'psi-min-signed'
    _guard(param, g.m, config.SIGNED_GRAPH_MAX_EDGES, max_edges)
    _guard(param, g.n, config.PSIS_MAX_N, None)
    # spanning-forest edges stay positive: one signature per switching class
    free = cotree_edges(g)

    def evaluate(index: int, bound: Optional[int]):
        found = _over_switchings(signature_at(g, free, index), MAXIMIZE, COMPLETE_SIGNED, bound)
        if found is None:
            return None
        value, s, labels = found
        return value, (s, labels)

    value, index, (s, labels) = _extremum(1 << len(free), evaluate, maximize, maximize,
                                          workers, progress, "Switching classes")
    return _result(param, value, labels, signature_at(g, free, index), s)


def psi_max_signed_graph(G: AnyGraph, max_edges: Optional[int] = None,
                         workers: Optional[int] = None, progress: bool = False) -> ParamResult:
    """Largest psis over the switching classes of signatures of G."""
    return _psis_over_classes(G, True, max_edges, workers, progress)


def psi_min_signed_graph(G: AnyGraph, max_edges: Optional[int] = None,
                         workers: Optional[int] = None, progress: bool = False) -> ParamResult:
    """Smallest psis over the switching classes of signatures of G."""
    return _psis_over_classes(G, False, max_edges, workers, progress)


def compute(param: str, g: Graph2EC, workers: Optional[int] = None, progress: bool = False) -> ParamResult:
    """Dispatch by CLI parameter name; g is read as a signed graph where the parameter needs one."""
    if param not in PARAMS:
        raise ValueError(f"unknown parameter {param!r}")
    if param == 'psi':
        return psi_ordinary(g)
    if param == 'psi2':
        return psi2(g)
    if param == 'chi2':
        return chi2(g)
    if param in ('psi-max', 'psi-min'):
        return _psi2_over_signatures(g, param == 'psi-max', None, workers, progress)
    if param in ('psi-max-signed', 'psi-min-signed'):
        return _psis_over_classes(g, param == 'psi-max-signed', None, workers, progress)
    sc = SignedClass.of(g)
    if param == 'psis':
        return psis(sc, workers=workers, progress=progress)
    if param == 'chis':
        return chi_s(sc, workers=workers, progress=progress)
    return _psi2_over_class(sc, param == 'psi-max-class', None, workers, progress)
