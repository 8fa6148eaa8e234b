import pytest
from hypothesis import given, settings

from sepdepth.errors import BudgetError
from sepdepth.generators import complete, cycle, exp_sep_graph, path, star
from sepdepth.graph import VertexSet, disjoint_union, from_edges
from sepdepth.oracle import CorpusSpec, corpus
from sepdepth.separators import (
    close_separators,
    enumerate_minimal_separators,
    full_components,
    is_minimal_separator,
    minimal_separators_bruteforce,
)

from test_graph import graphs


def as_lists(seps):
    return [sorted(s) for s in seps]


def test_full_components_examples():
    assert full_components(cycle(6), {0, 3}) == [{1, 2}, {4, 5}]
    assert full_components(star(3), {0}) == [{1}, {2}, {3}]
    assert full_components(path(4), {1, 2}) == []


def test_is_minimal_separator_examples():
    assert is_minimal_separator(path(3), {1})
    assert is_minimal_separator(cycle(4), {0, 2})
    assert not is_minimal_separator(cycle(4), {0, 1})
    k5 = complete(5)
    for s in ({0}, {0, 1}, {1, 2, 3}, set()):
        assert not is_minimal_separator(k5, s)


def test_enumeration_examples():
    assert as_lists(enumerate_minimal_separators(path(4))) == [[1], [2]]
    assert as_lists(enumerate_minimal_separators(cycle(4))) == [[0, 2], [1, 3]]
    assert len(enumerate_minimal_separators(complete(6))) == 0


def test_bruteforce_examples():
    assert len(minimal_separators_bruteforce(complete(4))) == 0
    assert as_lists(minimal_separators_bruteforce(path(3))) == [[1]]
    assert minimal_separators_bruteforce(cycle(5)).as_set() == {VertexSet([i, (i + 2) % 5]) for i in range(5)}


def test_bruteforce_budget(monkeypatch):
    monkeypatch.setenv("SEPDEPTH_BUDGET", "oracle_sep=5")
    with pytest.raises(BudgetError):
        minimal_separators_bruteforce(path(6))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_exp_sep_count_against_bruteforce(k):
    # {a, b}, one of x_i / y_i per path, and {a, y_i} / {b, x_i}
    g = exp_sep_graph(k)
    seps = enumerate_minimal_separators(g)
    assert seps == minimal_separators_bruteforce(g)
    assert len(seps) == 2**k + 2 * k + 1


def test_exp_sep_k3_listing():
    seps = enumerate_minimal_separators(exp_sep_graph(3))
    assert VertexSet([0, 1]) in seps
    cuts = [s for s in seps if len(s) == 3]
    assert len(cuts) == 8
    for s in cuts:
        assert all(len(s & {2 * i, 2 * i + 1}) == 1 for i in (1, 2, 3))


def test_output_is_canonically_ordered():
    seps = list(enumerate_minimal_separators(exp_sep_graph(4)))
    assert seps == sorted(seps)


def test_disconnected_input_is_per_component():
    g = disjoint_union(path(3), cycle(4))
    seps = enumerate_minimal_separators(g)
    assert as_lists(seps) == [[1], [3, 5], [4, 6]]
    assert VertexSet() not in seps
    # the subset filter also reports the empty set for disconnected graphs
    assert minimal_separators_bruteforce(g).as_set() == seps.as_set() | {VertexSet()}


def test_bounded_output():
    g = exp_sep_graph(4)
    full = enumerate_minimal_separators(g)
    for bound in range(6):
        bounded = enumerate_minimal_separators(g, max_size=bound)
        assert bounded.as_set() == {s for s in full if len(s) <= bound}
        assert enumerate_minimal_separators(g, bound, aggressive=True) == bounded


def test_aggressive_mode_generates_less():
    g = exp_sep_graph(8)
    sound = close_separators(g, g.all, 4)
    fast = close_separators(g, g.all, 4, aggressive=True)
    assert sorted(sound.kept) == sorted(fast.kept)
    assert fast.generated < sound.generated


def test_matches_bruteforce_on_corpus_up_to_7():
    for g in corpus(CorpusSpec(max_n=7)):
        assert enumerate_minimal_separators(g) == minimal_separators_bruteforce(g)


@settings(max_examples=150, deadline=None)
@given(graphs(9))
def test_enumeration_properties(g):
    seps = enumerate_minimal_separators(g)
    oracle = minimal_separators_bruteforce(g).as_set() - {VertexSet()}
    assert seps.as_set() == oracle
    for s in seps:
        assert is_minimal_separator(g, s)
        assert len(full_components(g, s)) >= 2


@settings(max_examples=100, deadline=None)
@given(graphs(9))
def test_aggressive_bounded_agrees_with_sound(g):
    for bound in (1, 2, 3):
        assert enumerate_minimal_separators(g, bound, aggressive=True) == enumerate_minimal_separators(g, bound)


def test_isolated_vertices_have_no_separators():
    assert len(enumerate_minimal_separators(from_edges(3, []))) == 0
