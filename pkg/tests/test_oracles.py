import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jaco import oracles
from jaco.graph import add_edges, complete_graph, cycle_graph, make_graph, path_graph, relabel, star_graph
from jaco.jacograph import build_jaco

from .conftest import graphs


@st.composite
def graph_and_perm(draw):
    g = draw(graphs(min_n=1, max_n=7))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return g, list(perm)


@settings(max_examples=40, deadline=None)
@given(graph_and_perm())
def test_invariants_survive_relabelling(gp):
    g, perm = gp
    h = relabel(g, perm)
    for fn in (oracles.alpha_oracle, oracles.gamma_oracle, oracles.chi_oracle,
               oracles.clique_oracle, oracles.cover_oracle):
        assert fn(g) == fn(h)
    assert oracles.murtage_oracle(g).value == oracles.murtage_oracle(h).value
    assert oracles.gamma_minus_oracle(g).value == oracles.gamma_minus_oracle(h).value


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_alpha_plus_cover_is_order(g):
    assert oracles.alpha_oracle(g) + oracles.cover_oracle(g) == g.n


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_chi_bounds(g):
    chi = oracles.chi_oracle(g)
    assert oracles.clique_oracle(g) <= chi <= g.max_degree + 1


@pytest.mark.parametrize("g,a,c,k,d", [
    (path_graph(5), 3, 2, 2, 2),
    (cycle_graph(5), 2, 3, 2, 2),
    (complete_graph(4), 1, 4, 4, 1),
    (star_graph(4), 4, 2, 2, 1),
    (make_graph(3, []), 3, 1, 1, 3),
])
def test_known_values(g, a, c, k, d):
    assert oracles.alpha_oracle(g) == a
    assert oracles.chi_oracle(g) == c
    assert oracles.clique_oracle(g) == k
    assert oracles.gamma_oracle(g) == d


def test_vertex_budget():
    with pytest.raises(oracles.BudgetExceeded):
        oracles.chi_oracle(path_graph(19))
    small = oracles.OracleBudget(gamma=3)
    with pytest.raises(oracles.BudgetExceeded):
        oracles.gamma_oracle(path_graph(4), small)


def test_time_budget():
    tight = oracles.OracleBudget(seconds=-1.0)
    with pytest.raises(oracles.BudgetExceeded):
        oracles.murtage_oracle(build_jaco(12).underlying, tight)


def test_murtage_j9():
    g = build_jaco(9).underlying
    r = oracles.murtage_oracle(g)
    assert r.value == 3
    assert oracles.gamma_oracle(add_edges(g, r.witness_edges)) == 1


def test_murtage_j12_witness():
    g = build_jaco(12).underlying
    r = oracles.murtage_oracle(g)
    assert r.value == 1
    assert oracles.gamma_oracle(add_edges(g, r.witness_edges)) < oracles.gamma_oracle(g)


def test_bondage_edgeless_rejected():
    with pytest.raises(ValueError):
        oracles.bondage_oracle(make_graph(2, []))
