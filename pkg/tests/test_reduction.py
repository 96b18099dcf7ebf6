"""Tests for 3-partition instances, the gadget graphs and the apex reduction."""

from itertools import combinations
from pathlib import Path

import networkx as nx
import pytest

from core.cliques.cliques import add_apex, is_2ec_clique
from core.exceptions import InstanceError, SizeGuardError
from core.morphism.coloring import Coloring
from core.morphism.identify import apply_merge_plan
from core.morphism.quotient import quotient
from core.reduction.gadgets import (
    GadgetLayout, apex_reduction, build_H, build_H_prime, check_diamond_free, find_diamond,
    witness_coloring,
)
from core.reduction.three_partition import (
    PartitionSolution, ReductionParams, ThreePartitionInstance, brute_force_3partition,
    default_params, k_of, normalize_instance, parse_params_override, read_instance,
)
from core.sgraph.graph import Sign
from core.sgraph.switching import SignedClass
from core.solvers.achromatic import psi_ordinary, psis, verify_complete_2ec, verify_complete_signed

INSTANCES = Path(__file__).resolve().parent.parent / 'data' / 'instances'

SMALL = ThreePartitionInstance(1, 12, (4, 4, 4))
SMALL_PARAMS = ReductionParams(q=2, r=2, p=3)


# ----------------------------------------------------------------------
# instances and parameters

def test_instance_invariants():
    with pytest.raises(InstanceError):
        ThreePartitionInstance(1, 12, (4, 4))
    with pytest.raises(InstanceError):
        ThreePartitionInstance(1, 12, (3, 4, 5))
    with pytest.raises(InstanceError):
        ThreePartitionInstance(1, 12, (4, 4, 5))
    with pytest.raises(InstanceError):
        ThreePartitionInstance(0, 12, ())


def test_normalize_scales_small_values():
    inst = read_instance(INSTANCES / 'needs_scaling.3p')
    assert not inst.normalized
    scaled = normalize_instance(inst)
    assert scaled == ThreePartitionInstance(1, 6, (2, 2, 2))
    assert normalize_instance(SMALL) is SMALL


def groupings(count):
    """Every split of range(count) into triples, each listed by its smallest index."""
    if not count:
        yield ()
        return
    rest = list(range(1, count))
    for i, j in combinations(rest, 2):
        remaining = [v for v in rest if v not in (i, j)]
        relabel = {k: v for k, v in enumerate(remaining)}
        for tail in groupings(len(remaining)):
            yield ((0, i, j),) + tuple(tuple(relabel[v] for v in group) for group in tail)


@pytest.mark.parametrize('inst', [
    ThreePartitionInstance(1, 3, (1, 1, 1)),
    ThreePartitionInstance(2, 6, (2, 2, 2, 2, 2, 2)),
    ThreePartitionInstance(2, 7, (2, 3, 2, 2, 3, 2)),
])
def test_normalize_keeps_the_solutions(inst):
    scaled = normalize_instance(inst)
    assert scaled.normalized and scaled != inst

    def solutions(of):
        found = set()
        for groups in groupings(3 * of.m):
            try:
                found.add(PartitionSolution.of(groups).validate(of))
            except InstanceError:
                pass
        return found

    assert solutions(scaled) == solutions(inst)
    assert brute_force_3partition(scaled) == brute_force_3partition(inst)


@pytest.mark.parametrize('inst, connected, q, r, p', [
    (SMALL, False, 30, 31, 177),
    (SMALL, True, 31, 35, 188),
    (ThreePartitionInstance(2, 13, (4, 4, 5, 4, 5, 4)), False, 64, 130, 895),
])
def test_default_params(inst, connected, q, r, p):
    params = default_params(inst, connected)
    assert (params.q, params.r, params.p, params.connected) == (q, r, p, connected)


def test_k_of():
    params = default_params(SMALL)
    assert k_of(SMALL, params) == 12922
    assert k_of(SMALL, params, primed=True) == 12923
    assert k_of(SMALL, SMALL_PARAMS) == 49


def test_params_override():
    params = parse_params_override("2,2,3", connected=True)
    assert params == ReductionParams(2, 2, 3, True)
    assert params.comment() == "q=2 r=2 p=3 connected=true"
    for text in ("2,2", "a,b,c", "2,2,1", "0,0,3", "-1,2,3"):
        with pytest.raises(InstanceError):
            parse_params_override(text)


def test_brute_force_solver():
    solvable = read_instance(INSTANCES / 'solvable_m2.3p')
    sol = brute_force_3partition(solvable)
    assert sol == PartitionSolution(((0, 1, 2), (3, 4, 5)))
    assert sol.validate(solvable) is sol
    assert brute_force_3partition(read_instance(INSTANCES / 'unsolvable_m2.3p')) is None
    with pytest.raises(SizeGuardError):
        brute_force_3partition(solvable, max_m=1)


def test_solution_validation():
    solvable = read_instance(INSTANCES / 'solvable_m2.3p')
    with pytest.raises(InstanceError):
        PartitionSolution.of([(0, 1, 3), (2, 4, 5)]).validate(solvable)
    with pytest.raises(InstanceError):
        PartitionSolution.of([(0, 1, 2)]).validate(solvable)
    with pytest.raises(InstanceError):
        PartitionSolution.of([(0, 1, 2), (2, 4, 5)]).validate(solvable)


# ----------------------------------------------------------------------
# the gadget H(I)

def test_small_gadget_counts():
    h = build_H(SMALL, SMALL_PARAMS)
    layout = GadgetLayout(SMALL, SMALL_PARAMS)
    assert (h.n, h.m) == (64, 424)
    assert layout.n == 64
    assert h.names[layout.s(2)] == 's2'
    assert h.names[layout.e(3, 4)] == 'e3_4'
    assert h.names[layout.t(1)] == 't1'
    assert h.names[layout.x(16, 3)] == 'x16_3'


def test_gadget_edge_signs():
    h = build_H(SMALL, SMALL_PARAMS)
    layout = GadgetLayout(SMALL, SMALL_PARAMS)
    assert h.sign(layout.s(1), layout.e(1, 2)) is Sign.POSITIVE
    assert h.sign(layout.x(5, 1), layout.x(5, 3)) is Sign.NEGATIVE
    assert h.sign(layout.x(5, 2), layout.x(9, 2)) is Sign.POSITIVE
    assert h.sign(layout.t(1), layout.x(13, 1)) is Sign.POSITIVE
    assert h.sign(layout.t(1), layout.x(12, 1)) is None
    assert h.sign(layout.x(1, 1), layout.x(2, 2)) is None


def test_target_clique_is_negative():
    inst = read_instance(INSTANCES / 'solvable_m2.3p')
    params = ReductionParams(1, 1, 2)
    h = build_H(inst, params)
    layout = GadgetLayout(inst, params)
    assert h.sign(layout.t(1), layout.t(2)) is Sign.NEGATIVE
    assert len(h.components()) == 3 * inst.m + 1


def test_connected_variant():
    h = build_H(SMALL, ReductionParams(2, 2, 3, connected=True))
    assert len(h.components()) == 1
    assert h.m == 424 + 3
    assert len(build_H(SMALL, SMALL_PARAMS).components()) == 4


def test_gadget_size_guard():
    with pytest.raises(SizeGuardError):
        build_H(SMALL, SMALL_PARAMS, max_n=63)
    with pytest.raises(SizeGuardError):
        build_H_prime(SMALL, SMALL_PARAMS, max_n=64)


def test_witness_coloring_is_complete():
    h = build_H(SMALL, SMALL_PARAMS)
    sol = brute_force_3partition(SMALL)
    plan, coloring = witness_coloring(SMALL, SMALL_PARAMS, sol)
    assert coloring.k == k_of(SMALL, SMALL_PARAMS) == 49
    assert len(plan) == 64 - 49
    assert verify_complete_2ec(h, coloring)
    merged = apply_merge_plan(h, plan)
    assert merged == quotient(h, coloring).graph
    assert is_2ec_clique(merged)


def test_witness_on_two_groups():
    inst = read_instance(INSTANCES / 'solvable_m2.3p')
    params = ReductionParams(1, 1, 2)
    h = build_H(inst, params)
    _, coloring = witness_coloring(inst, params, brute_force_3partition(inst))
    assert coloring.k == k_of(inst, params)
    assert verify_complete_2ec(h, coloring)


@pytest.mark.parametrize('inst, params', [
    (SMALL, ReductionParams(2, 2, 3, connected=True)),
    (ThreePartitionInstance(2, 13, (4, 4, 5, 4, 5, 4)), ReductionParams(1, 1, 2, connected=True)),
])
def test_witness_on_connected_variant(inst, params):
    h = build_H(inst, params)
    assert len(h.components()) == 1
    _, coloring = witness_coloring(inst, params, brute_force_3partition(inst))
    assert coloring.k == k_of(inst, params)
    assert verify_complete_2ec(h, coloring)


def test_witness_rejects_wrong_solution():
    inst = read_instance(INSTANCES / 'solvable_m2.3p')
    with pytest.raises(InstanceError):
        witness_coloring(inst, ReductionParams(1, 1, 2), PartitionSolution.of([(0, 1, 3), (2, 4, 5)]))


def test_diamonds():
    h = build_H(SMALL, SMALL_PARAMS)
    layout = GadgetLayout(SMALL, SMALL_PARAMS)
    u, v, w, x = find_diamond(h)
    assert h.has_edge(u, v) and h.has_edge(u, w) and h.has_edge(v, x)
    assert not h.has_edge(w, x)
    assert not check_diamond_free(h)
    assert check_diamond_free(h.delete_vertex(layout.t(1)))
    with pytest.raises(SizeGuardError):
        find_diamond(h, max_n=10)


def test_h_prime_is_connected_with_apex():
    g = build_H_prime(SMALL, SMALL_PARAMS)
    assert isinstance(g, nx.Graph)
    assert g.number_of_nodes() == 65
    assert g.number_of_edges() == 424 + 64
    assert nx.is_connected(g)


def test_h_prime_witness_is_signed_complete():
    # the signature of H plus a positive apex, with the apex in a class of its own
    h = build_H(SMALL, SMALL_PARAMS)
    _, coloring = witness_coloring(SMALL, SMALL_PARAMS, brute_force_3partition(SMALL))
    extended = Coloring(coloring.colors + (coloring.k + 1,), coloring.k + 1)
    assert extended.k == k_of(SMALL, SMALL_PARAMS, primed=True)
    assert verify_complete_signed(add_apex(h), extended)


@pytest.mark.slow
def test_default_params_gadget_full_size():
    params = default_params(SMALL)
    h = build_H(SMALL, params)
    assert h.n == 15 + 1 + 73 * 177
    _, coloring = witness_coloring(SMALL, params, brute_force_3partition(SMALL))
    assert coloring.k == 12922
    assert verify_complete_2ec(h, coloring)


# ----------------------------------------------------------------------
# apex reduction

@pytest.mark.parametrize('graph, psi', [
    (nx.complete_graph(3), 3),
    (nx.path_graph(4), 3),
    (nx.complete_graph(1), 1),
])
def test_apex_reduction_small(graph, psi):
    sc = apex_reduction(graph)
    assert sc.n == graph.number_of_nodes() + 1
    assert all(s is Sign.POSITIVE for _, _, s in sc.representative.edges)
    assert psis(sc).value == psi + 1


def test_apex_reduction_on_connected_graphs():
    graphs = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 5 and nx.is_connected(g)]
    assert len(graphs) == 31
    for g in graphs:
        assert psis(apex_reduction(g)).value == psi_ordinary(g).value + 1, sorted(g.edges())


def test_apex_reduction_representative_is_class_member():
    sc = apex_reduction(nx.path_graph(3))
    assert sc == SignedClass.of(sc.representative)
