"""Tests for colorings, identifiability, merging and quotients."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.cliques.cliques import is_2ec_clique, is_signed_clique
from core.exceptions import GraphError, InvalidColoringError, NotIdentifiableError
from core.morphism.coloring import Coloring, MergePlan, MergeStep
from core.morphism.identify import (
    apply_merge_plan, first_identifiable_pair, first_identifiable_pair_signed,
    identifiable_2ec, identifiable_signed, merge_2ec, merge_signed,
)
from core.morphism.quotient import (
    MONOCHROMATIC, SIGN_CONFLICT, color_conflicts, quotient, verify_hom_2ec,
    verify_hom_signed,
)
from core.sgraph.graph import Graph2EC, Sign, SwitchingSet
from core.sgraph.switching import SignedClass, apply_switching, is_equivalent, uc4_antipodal
from core.solvers.achromatic import verify_complete_2ec, verify_complete_signed
from tests.oracles import (
    all_signatures, brute_identifiable_2ec, brute_identifiable_signed, brute_quotient, labelings,
)
from tests.strategies import (
    PROPERTY_SETTINGS, graphs_with_pair, graphs_with_twin, many_examples, signed_graphs,
)

POS, NEG = Sign.POSITIVE, Sign.NEGATIVE


def up3_graph():
    return Graph2EC.from_named_edges(['a', 'b', 'c'], [('b', 'a', '-'), ('b', 'c', '+')])


def uc4_graph():
    return Graph2EC.from_named_edges(
        ['a1', 'a2', 'a3', 'a4'],
        [('a1', 'a2', '+'), ('a1', 'a4', '-'), ('a3', 'a2', '+'), ('a3', 'a4', '+')],
    )


def ec_clique5_graph():
    return Graph2EC.from_named_edges(
        ['x', 'a', 'b', 'c', 'd'],
        [('x', 'a', '+'), ('x', 'b', '+'), ('x', 'c', '-'), ('x', 'd', '-'),
         ('a', 'b', '+'), ('d', 'c', '+')],
    )


@st.composite
def colored_graphs(draw, max_n=6):
    """A graph with an arbitrary (not necessarily valid) coloring, and an optional switch."""
    g = draw(signed_graphs(min_n=1, max_n=max_n))
    labels = draw(st.lists(st.integers(min_value=0, max_value=g.n - 1), min_size=g.n, max_size=g.n))
    switch = draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
    return g, Coloring.from_labels(labels, SwitchingSet.of(switch) if switch else None)


# ----------------------------------------------------------------------
# colorings and merge plans

def test_coloring_must_be_surjective():
    with pytest.raises(InvalidColoringError):
        Coloring((1, 3), 3)
    with pytest.raises(InvalidColoringError):
        Coloring((0, 1), 1)


def test_coloring_from_labels_numbers_by_first_occurrence():
    col = Coloring.from_labels(['x', 'y', 'x', 'z'])
    assert col.colors == (1, 2, 1, 3)
    assert col.classes() == [[0, 2], [1], [3]]
    assert col.as_map() == (0, 1, 0, 2)


def test_coloring_from_classes():
    assert Coloring.from_classes([[1], [0, 2]], 3).colors == (2, 1, 2)
    with pytest.raises(InvalidColoringError):
        Coloring.from_classes([[0], [0, 1]], 2)
    with pytest.raises(InvalidColoringError):
        Coloring.from_classes([[0]], 2)


def test_merge_plan_to_coloring():
    plan = MergePlan.of([(0, 2), (3, 4), (0, 3)])
    assert plan.to_coloring(5).colors == (1, 2, 1, 1, 1)


@pytest.mark.parametrize('pairs', [[(0, 0)], [(0, 1), (1, 2)], [(0, 5)]])
def test_merge_plan_rejects_bad_steps(pairs):
    with pytest.raises(GraphError):
        MergePlan.of(pairs).validate(3)


# ----------------------------------------------------------------------
# identifiability

def test_uc4_pairs():
    g = uc4_graph()
    assert not identifiable_2ec(g, 0, 2)
    assert identifiable_signed(g, 0, 2) is None
    assert identifiable_signed(SignedClass.of(g), 1, 3) is None
    assert first_identifiable_pair(g) is None
    assert first_identifiable_pair_signed(SignedClass.of(g)) is None


def test_up3_ends_need_a_switch():
    g = up3_graph()
    assert not identifiable_2ec(g, 0, 2)
    assert identifiable_signed(g, 0, 2) == SwitchingSet.of([0])
    p3 = apply_switching(g, SwitchingSet.of([0]))
    assert identifiable_2ec(p3, 0, 2)
    assert identifiable_signed(p3, 0, 2) == SwitchingSet()


def test_ec_clique5_pair_becomes_identifiable_after_resigning():
    g = ec_clique5_graph()
    a, b, c = g.index('a'), g.index('b'), g.index('c')
    assert not identifiable_2ec(g, a, c)
    assert uc4_antipodal(g, a, c) is None
    # re-signing a and b also works, though it is not the set the rule picks
    assert identifiable_2ec(apply_switching(g, SwitchingSet.of([a, b])), a, c)
    s = identifiable_signed(g, a, c)
    assert s == SwitchingSet.of([a])
    assert identifiable_2ec(apply_switching(g, s), a, c)


def test_merge_signed_on_ec_clique5_is_a_homomorphism():
    sc = SignedClass.of(ec_clique5_graph())
    a, c = sc.representative.index('a'), sc.representative.index('c')
    merged = merge_signed(sc, a, c)
    assert merged.n == 4
    assert merged.names == ('x', 'a', 'b', 'd')
    phi = (0, 1, 2, 1, 3)
    s = identifiable_signed(sc, a, c)
    # carry the merged graph's canonicalizing switch back through phi
    lifted = SwitchingSet.of(v for v in range(sc.n) if phi[v] in merged.source_switch)
    assert verify_hom_signed(sc, merged, phi, s.compose(lifted))


def test_adjacent_pair_is_never_identifiable():
    g = up3_graph()
    assert not identifiable_2ec(g, 0, 1)
    assert identifiable_signed(g, 0, 1) is None


def test_pair_must_be_distinct():
    with pytest.raises(GraphError):
        identifiable_2ec(up3_graph(), 1, 1)


@given(graphs_with_pair())
@many_examples(300)
def test_identifiable_2ec_matches_brute_force(case):
    g, u, v = case
    assert identifiable_2ec(g, u, v) == brute_identifiable_2ec(g, u, v)


@given(signed_graphs(min_n=2, max_n=7))
@many_examples(300)
def test_identifiable_signed_matches_brute_force(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            s = identifiable_signed(g, u, v)
            assert (s is not None) == brute_identifiable_signed(g, u, v)
            blocked = g.has_edge(u, v) or uc4_antipodal(g, u, v) is not None
            assert (s is None) == blocked
            if s is not None:
                assert identifiable_2ec(apply_switching(g, s), u, v)


@given(graphs_with_pair(max_n=6))
@PROPERTY_SETTINGS
def test_signed_identifiability_is_class_invariant(case):
    g, u, v = case
    sc = SignedClass.of(g)
    assert (identifiable_signed(sc, u, v) is None) == (identifiable_signed(g, u, v) is None)


# ----------------------------------------------------------------------
# merging

def test_merge_reasons():
    g = up3_graph()
    with pytest.raises(NotIdentifiableError) as info:
        merge_2ec(g, 0, 1)
    assert info.value.reason == 'loop'
    with pytest.raises(NotIdentifiableError) as info:
        merge_2ec(g, 0, 2)
    assert info.value.reason == 'digon'
    with pytest.raises(NotIdentifiableError) as info:
        merge_signed(SignedClass.of(uc4_graph()), 0, 2)
    assert info.value.reason == 'uc4'


def test_merge_keeps_lower_name_and_records_absorbed():
    p3 = Graph2EC.from_named_edges(['a', 'b', 'c'], [('a', 'b', '+'), ('b', 'c', '+')])
    merged = merge_2ec(p3, 2, 0)
    assert merged.names == ('a', 'b')
    assert merged.absorbed == (('c',), ())
    assert merged.edges == ((0, 1, POS),)


def test_merge_signed_up3():
    merged = merge_signed(SignedClass.of(up3_graph()), 0, 2)
    assert merged.n == 2
    assert merged.representative.edges == ((0, 1, POS),)


@given(graphs_with_twin())
@PROPERTY_SETTINGS
def test_merging_twins_deletes_the_copy(case):
    g, u, twin = case
    assert merge_2ec(g, u, twin) == g.delete_vertex(twin)


@given(graphs_with_pair(max_n=6))
@PROPERTY_SETTINGS
def test_merge_signed_follows_the_prescribed_switch(case):
    g, u, v = case
    sc = SignedClass.of(g)
    s = identifiable_signed(sc, u, v)
    if s is None:
        with pytest.raises(NotIdentifiableError):
            merge_signed(sc, u, v)
        return
    merged = merge_signed(sc, u, v)
    assert merged.n == g.n - 1
    assert is_equivalent(merged.representative, merge_2ec(apply_switching(sc.representative, s), u, v))


def test_apply_merge_plan_matches_quotient():
    p3 = Graph2EC.from_named_edges(['a', 'b', 'c', 'd'],
                                   [('a', 'b', '+'), ('b', 'c', '+'), ('c', 'd', '-')])
    plan = MergePlan.of([(3, 0)])
    image = quotient(p3, plan.to_coloring(4))
    assert apply_merge_plan(p3, plan) == image.graph


def test_apply_merge_plan_with_pre_switch():
    g = up3_graph()
    plan = MergePlan((MergeStep(0, 2, SwitchingSet.of([0])),))
    assert apply_merge_plan(g, plan, signed=True).edges == ((0, 1, POS),)
    with pytest.raises(NotIdentifiableError):
        apply_merge_plan(g, plan)


# ----------------------------------------------------------------------
# quotients

def test_monochromatic_edge_violation():
    g = up3_graph()
    image = quotient(g, Coloring((1, 1, 2), 2))
    assert not image.ok
    assert image.violation.kind == MONOCHROMATIC
    assert image.violation.colors == (1, 1)
    assert image.violation.describe(g) == "monochromatic-edge between colors 1 and 1: a-b -"


def test_sign_conflict_violation():
    g = uc4_graph()
    image = quotient(g, Coloring((1, 2, 1, 3), 3))
    assert image.violation.kind == SIGN_CONFLICT
    assert image.violation.colors == (1, 3)
    assert image.violation.edges == ((0, 3, NEG), (2, 3, POS))


def test_switch_line_is_applied_first():
    g = up3_graph()
    image = quotient(g, Coloring((1, 2, 1), 2, SwitchingSet.of([0])))
    assert image.ok
    assert image.graph.edges == ((0, 1, POS),)
    assert image.graph.names == ('a', 'b')
    assert image.graph.absorbed == (('c',), ())


@given(colored_graphs())
@PROPERTY_SETTINGS
def test_quotient_matches_brute_force(case):
    g, col = case
    source = apply_switching(g, col.switching) if col.switching else g
    expected = brute_quotient(source, col.as_map())
    image = quotient(g, col)
    assert image.ok == (expected is not None)
    if image.ok:
        assert image.graph.edges == expected.edges
        assert verify_hom_2ec(source, image.graph, col.as_map())


def test_verify_hom_rejects_bad_maps():
    g = up3_graph()
    h = Graph2EC.from_edges(2, [(0, 1, '-')])
    assert not verify_hom_2ec(g, h, (0, 1, 0))
    assert not verify_hom_2ec(g, h, (0, 1))
    assert not verify_hom_2ec(g, h, (0, 0, 0))
    assert not verify_hom_2ec(g, h, (0, 1, 2))


@given(colored_graphs())
@PROPERTY_SETTINGS
def test_verify_hom_signed_with_lifted_switch(case):
    g, col = case
    sc = SignedClass.of(g)
    image = quotient(sc.representative, col.with_switching(None))
    if not image.ok:
        return
    sc_h = SignedClass.of(image.graph)
    phi = col.as_map()
    # lift the target's canonicalizing switch back through phi
    lifted = SwitchingSet.of(v for v in range(g.n) if phi[v] in sc_h.source_switch)
    assert verify_hom_signed(sc, sc_h, phi, lifted)
    assert not verify_hom_signed(sc, sc_h, phi, SwitchingSet.of([g.n + 3]))


@given(colored_graphs())
@PROPERTY_SETTINGS
def test_color_conflicts_match_quotient_cliques(case):
    g, col = case
    image = quotient(g, col)
    if not image.ok:
        return
    h = image.graph
    conflicts = color_conflicts(g, col)
    for (i, j), conflict in conflicts.items():
        assert conflict == (not identifiable_2ec(h, i - 1, j - 1))
    assert all(conflicts.values()) == is_2ec_clique(h)
    signed = color_conflicts(g, col, signed=True)
    for (i, j), conflict in signed.items():
        assert conflict == (identifiable_signed(h, i - 1, j - 1) is None)
    assert all(signed.values()) == is_signed_clique(SignedClass.of(h))


def test_complete_colorings_agree_exhaustively():
    # every signature of every graph on up to five vertices, every partition
    checked = 0
    for g in all_signatures(5):
        if g.n == 0:
            continue
        for labels in labelings(g.n):
            col = Coloring.from_labels(labels)
            image = quotient(g, col)
            assert image.ok == (brute_quotient(g, labels) is not None)
            if not image.ok:
                continue
            checked += 1
            assert all(color_conflicts(g, col).values()) == verify_complete_2ec(g, col)
            assert all(color_conflicts(g, col, signed=True).values()) == verify_complete_signed(g, col)
    assert checked > 0
