import random

import networkx as nx
import pytest

from dpcolor import constructions as C
from dpcolor.budget import Budget, BudgetExceeded
from dpcolor.graph import (
    Graph,
    GraphFormatError,
    chromatic_number,
    clique_number,
    coloring_number,
    delete_vertex,
    feedback_vertex_number,
    find_isomorphism,
    format_edge_list,
    independence_number,
    induced_subgraph,
    is_chordal,
    is_chord_free_cycle,
    is_independent,
    is_perfect_elimination_order,
    largest_degenerate_subgraph,
    parse_edge_list,
    partial_t_chromatic,
    proper_coloring,
    relabel,
)
from oracles import (
    brute_chromatic,
    brute_fvs,
    brute_partial_chromatic,
    nx_alpha,
    nx_coloring_number,
    random_instances,
    to_nx,
)


def test_edges_are_normalised_and_sorted():
    g = Graph(4, ((3, 1), (0, 2), (1, 0)))
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.m == 3 and g.degree(1) == 2
    assert g.has_edge(3, 1) and not g.has_edge(2, 3)


@pytest.mark.parametrize("n,edges", [
    (3, ((0, 0),)),
    (3, ((0, 1), (1, 0))),
    (3, ((0, 3),)),
    (0, ()),
])
def test_bad_graphs_rejected(n, edges):
    with pytest.raises(GraphFormatError):
        Graph(n, edges)


def test_edge_list_round_trip():
    g = C.q3()
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 1 2\n", "3 2\n0 1\n1 0\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_comments_and_blank_lines_ignored():
    g = parse_edge_list("# a path\n3 2\n\n0 1  # first\n1 2\n")
    assert g == C.path(3)


def test_components_and_cyclomatic():
    g = C.disjoint_union(C.cycle(4), C.path(3))
    assert [sorted(c) for c in g.components()] == [[0, 1, 2, 3], [4, 5, 6]]
    assert g.cyclomatic_number() == 1
    assert not g.is_connected()
    assert C.path(5).is_acyclic()


def test_induced_subgraph_map():
    sub, keep = induced_subgraph(C.cycle(5), [4, 0, 1])
    assert list(keep) == [0, 1, 4]
    assert sub.edges == ((0, 1), (0, 2))
    assert delete_vertex(C.cycle(4), 0) == C.path(3)


@pytest.mark.parametrize("g,alpha", [
    (C.q3(), 4), (C.wagner_v8(), 3), (C.gadget_g(), 2), (C.cycle(7), 3), (C.complete(5), 1),
])
def test_independence_known(g, alpha):
    size, witness = independence_number(g)
    assert size == alpha and len(witness) == alpha
    assert is_independent(g, witness)


def test_independence_matches_networkx():
    for g in random_instances(11, 40, extra_max=8):
        assert independence_number(g)[0] == nx_alpha(g)


def test_clique_and_chromatic_against_brute_force():
    for g in random_instances(12, 30, n_max=7, extra_max=8):
        chi = chromatic_number(g)
        assert chi == brute_chromatic(g)
        assert clique_number(g) <= chi
        col = proper_coloring(g, chi)
        assert all(col[u] != col[v] for u, v in g.edges)


def test_chromatic_named():
    assert chromatic_number(C.q3()) == 2
    assert chromatic_number(C.wagner_v8()) == 3
    assert chromatic_number(C.gadget_g()) == 3
    assert chromatic_number(C.cycle(5)) == 3
    assert proper_coloring(C.cycle(5), 2) is None


def test_chromatic_size_cap():
    with pytest.raises(BudgetExceeded):
        chromatic_number(C.path(30), Budget(max_vertices=24))


def test_partial_t_chromatic_against_brute_force():
    for g in random_instances(13, 20, n_max=7, extra_max=8):
        for t in (1, 2):
            assert partial_t_chromatic(g, t) == brute_partial_chromatic(g, t)


def test_coloring_number_matches_cores():
    for g in random_instances(14, 40, extra_max=8):
        assert coloring_number(g) == nx_coloring_number(g)
    assert coloring_number(C.q3()) == 4
    assert coloring_number(C.gadget_g()) == 3


@pytest.mark.parametrize("g,tau", [
    (C.q3(), 3), (C.wagner_v8(), 3), (C.gadget_g(), 2), (C.cycle(6), 1), (C.path(4), 0), (C.complete(5), 3),
])
def test_feedback_vertex_number_known(g, tau):
    k, fvs = feedback_vertex_number(g)
    assert k == tau
    h = to_nx(g)
    h.remove_nodes_from(fvs)
    assert nx.is_forest(h)


def test_feedback_vertex_number_brute_force():
    for g in random_instances(15, 40, extra_max=6):
        assert feedback_vertex_number(g)[0] == brute_fvs(g)


def test_largest_degenerate_subgraph_limits():
    g = C.q3()
    assert largest_degenerate_subgraph(g, 0)[0] == 4
    assert largest_degenerate_subgraph(g, 1)[0] == 5
    assert largest_degenerate_subgraph(g, 2)[0] == 7
    assert largest_degenerate_subgraph(g, 3)[0] == 8


def test_largest_degenerate_brute_force():
    from itertools import combinations
    for g in random_instances(16, 15, n_max=7, extra_max=8):
        for d in (0, 1, 2):
            size, keep = largest_degenerate_subgraph(g, d)
            best = 0
            for k in range(g.n, -1, -1):
                for sub in combinations(range(g.n), k):
                    h = to_nx(g).subgraph(sub)
                    if len(sub) == 0 or max(nx.core_number(h).values(), default=0) <= d:
                        best = k
                        break
                if best:
                    break
            assert size == best
            assert len(keep) == size


def test_chordality_certificates():
    ok, peo = is_chordal(C.complete(4))
    assert ok and is_perfect_elimination_order(C.complete(4), peo)
    ok, cyc = is_chordal(C.cycle(5))
    assert not ok and len(cyc) == 5 and is_chord_free_cycle(C.cycle(5), cyc)
    ok, cyc = is_chordal(C.q3())
    assert not ok and len(cyc) >= 4 and is_chord_free_cycle(C.q3(), cyc)


def test_chordality_matches_networkx():
    for g in random_instances(17, 60, extra_max=8):
        ok, cert = is_chordal(g)
        assert ok == nx.is_chordal(to_nx(g))
        if not ok:
            assert is_chord_free_cycle(g, cert)


def test_isomorphism():
    rng = random.Random(3)
    g = C.wagner_v8()
    perm = list(range(8))
    rng.shuffle(perm)
    h = relabel(g, perm)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)
    assert find_isomorphism(C.q3(), g) is None
    assert find_isomorphism(C.mobius_ladder(4), g) is not None
