import pytest
from hypothesis import given, settings

from sepdepth.errors import BudgetError, InputError
from sepdepth.generators import complete, cycle, exp_sep_graph, grid, path, star
from sepdepth.graph import VertexSet, disjoint_union, from_edges
from sepdepth.oracle import treewidth_bruteforce
from sepdepth.treewidth import (
    TreeDecomposition,
    bounds,
    decomposition_from_order,
    treewidth_exact,
    treewidth_lower,
    treewidth_upper,
    verify_tree_decomposition,
)

from test_graph import graphs

TREE6 = from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])


def td_of(bags, edges):
    return TreeDecomposition(tuple(VertexSet(b) for b in bags), tuple(edges))


@pytest.mark.parametrize("g, want", [(path(5), 1), (complete(4), 3), (grid(4, 3), 3), (exp_sep_graph(3), 2)])
def test_exact_examples(g, want):
    width, dec = treewidth_exact(g)
    assert width == want
    assert dec.width == want
    assert verify_tree_decomposition(g, dec)


def test_exact_empty_graph():
    assert treewidth_exact(from_edges(0, []))[0] == -1


def test_exact_budget(monkeypatch):
    monkeypatch.setenv("SEPDEPTH_BUDGET", "tw_exact=5")
    with pytest.raises(BudgetError):
        treewidth_exact(cycle(6))
    # budget is per component
    assert treewidth_exact(disjoint_union(cycle(5), cycle(5)))[0] == 2


@pytest.mark.parametrize("g, want", [(TREE6, 1), (cycle(6), 2), (complete(5), 4)])
def test_upper_examples(g, want):
    width, order = treewidth_upper(g)
    assert width == want
    assert decomposition_from_order(g, order).width == width


@pytest.mark.parametrize("g, want", [(complete(5), 4), (cycle(6), 2), (path(5), 1)])
def test_lower_examples(g, want):
    assert treewidth_lower(g) == want


def test_verify_examples():
    p3, k3 = path(3), complete(3)
    assert verify_tree_decomposition(p3, td_of([{0, 1}, {1, 2}], [(0, 1)]))
    assert not verify_tree_decomposition(k3, td_of([{0, 1}, {1, 2}], [(0, 1)]))
    assert not verify_tree_decomposition(p3, td_of([{0, 1}, {2}], [(0, 1)]))  # edge (1, 2) uncovered
    assert verify_tree_decomposition(p3, td_of([{0, 1}, {1, 2}, {1}], [(0, 2), (2, 1)]))


def test_verify_rejects_broken_structure():
    p3 = path(3)
    # vertex 1 in two bags that are not joined through bags holding it
    assert not verify_tree_decomposition(p3, td_of([{0, 1}, {0}, {1, 2}], [(0, 1), (1, 2)]))
    # not a tree
    assert not verify_tree_decomposition(p3, td_of([{0, 1}, {1, 2}], []))
    with pytest.raises(InputError):
        verify_tree_decomposition(p3, td_of([{0, 1}, {1, 2}], [(0, 5)]))
    with pytest.raises(InputError):
        verify_tree_decomposition(p3, td_of([{0, 1}, {1, 7}], [(0, 1)]))


def test_oracle_examples():
    assert treewidth_bruteforce(cycle(5)) == 2
    assert treewidth_bruteforce(complete(4)) == 3
    assert treewidth_bruteforce(TREE6) == 1
    assert treewidth_bruteforce(star(5)) == 1


@settings(max_examples=120, deadline=None)
@given(graphs(8))
def test_exact_matches_bruteforce_and_bounds(g):
    width, dec = treewidth_exact(g)
    assert width == treewidth_bruteforce(g)
    assert verify_tree_decomposition(g, dec) and dec.width == width
    b = bounds(g)
    assert b.lower <= width <= b.upper
    assert decomposition_from_order(g, b.upper_witness).width == b.upper
