"""Hypothesis-driven invariants on small random graphs and covers."""
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from dpcolor import constructions as C
from dpcolor.cover import (
    Cover,
    apply_gauge,
    canonicalize,
    is_gauge_equivalent,
    spanning_forest,
    validate_cover,
)
from dpcolor.graph import Graph, format_edge_list, is_chordal, parse_edge_list
from dpcolor.serialize import dumps_cover, loads_cover
from dpcolor.solver import alpha_t_dp, is_valid_transversal, max_transversal
from dpcolor.twist import TwistAssignment, alpha_2_dp_fast, feasible, max_partial_twist, twist_to_cover
from oracles import brute_max_transversal, brute_twist_colorable


@st.composite
def graphs(draw, n_max=8, extra_max=4):
    n = draw(st.integers(1, n_max))
    edges = set()
    for v in range(1, n):
        if draw(st.booleans()) or draw(st.booleans()):
            edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=extra_max, unique=True))
        edges.update(extra)
    return Graph(n, tuple(sorted(edges)))


@st.composite
def covers(draw, t_max=3, perfect=False):
    g = draw(graphs(n_max=7))
    t = draw(st.integers(1, t_max))
    mats = []
    for _ in g.edges:
        p = draw(st.permutations(range(t)))
        if not perfect:
            p = [None if draw(st.integers(0, 4)) == 0 else j for j in p]
        mats.append(tuple(p))
    return Cover(g, t, tuple(mats))


@st.composite
def gauges(draw, n, t):
    return tuple(tuple(draw(st.permutations(range(t)))) for _ in range(n))


@st.composite
def twists(draw):
    g = draw(graphs(n_max=9, extra_max=5))
    bits = tuple(draw(st.integers(0, 1)) for _ in g.edges)
    return TwistAssignment(g, bits)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(covers())
def test_cover_json_round_trip(c):
    assert loads_cover(dumps_cover(c)) == c


@given(covers())
def test_max_transversal_is_optimal_and_valid(c):
    size, s = max_transversal(c)
    assert is_valid_transversal(c, s)
    assert size == brute_max_transversal(c)


@given(st.data())
def test_gauge_invariance(data):
    c = data.draw(covers())
    gauge = data.draw(gauges(c.n, c.fold))
    d = apply_gauge(c, gauge)
    assert validate_cover(d) is None
    assert max_transversal(c)[0] == max_transversal(d)[0]


@given(st.data())
def test_canonical_form(data):
    c = data.draw(covers(perfect=True))
    cc, gauge = canonicalize(c)
    assert apply_gauge(c, gauge) == cc
    assert canonicalize(cc)[0] == cc
    tree = set(spanning_forest(c.base)[0])
    ident = tuple(range(c.fold))
    assert all(m == ident for e, m in zip(c.base.edges, cc.matchings) if e in tree)
    assert is_gauge_equivalent(c, cc)


@given(twists())
def test_twist_feasibility(tw):
    res = feasible(tw)
    assert bool(res) == brute_twist_colorable(tw.base, tw.bits)
    if res:
        assert is_valid_transversal(twist_to_cover(tw), res.transversal)


@given(twists())
def test_max_partial_twist_is_max_transversal(tw):
    assert max_partial_twist(tw).size == max_transversal(twist_to_cover(tw))[0]


@given(graphs(n_max=7, extra_max=4))
def test_fast_and_generic_alpha_2(g):
    a, b = alpha_2_dp_fast(g), alpha_t_dp(g, 2)
    assert (a.value, a.cover_index) == (b.value, b.cover_index)


@given(st.integers(1, 12), st.fractions(0, 1, max_denominator=8), st.integers(0, 10**6))
def test_chordal_generator(n, density, seed):
    g = C.random_chordal(n, Fraction(density), seed)
    assert g.n == n and is_chordal(g)[0]
