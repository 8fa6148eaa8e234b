import pytest

from sepdepth.errors import BudgetError, InputError
from sepdepth.generators import complete, cycle, path
from sepdepth.graph import from_edges
from sepdepth.oracle import (
    CorpusSpec,
    canonical_form,
    connected_graphs,
    corpus,
    treedepth_bruteforce,
    treewidth_bruteforce,
)

# connected graphs up to isomorphism, n = 1..7
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def test_treedepth_examples():
    assert treedepth_bruteforce(complete(3)) == 3
    assert treedepth_bruteforce(path(4)) == 3
    assert treedepth_bruteforce(cycle(4)) == 3
    assert treedepth_bruteforce(from_edges(0, [])) == 0


def test_treedepth_disconnected():
    assert treedepth_bruteforce(from_edges(5, [(0, 1), (2, 3), (3, 4)])) == 2


def test_budgets():
    with pytest.raises(BudgetError):
        treedepth_bruteforce(path(13))
    with pytest.raises(BudgetError):
        treewidth_bruteforce(path(9))


def test_budget_override(monkeypatch):
    monkeypatch.setenv("SEPDEPTH_BUDGET", "oracle_td=14")
    assert treedepth_bruteforce(path(13)) == 4


@pytest.mark.parametrize("n, count", list(enumerate(CONNECTED_COUNTS, 1)))
def test_exhaustive_counts(n, count):
    graphs = connected_graphs(n)
    assert len(graphs) == count
    assert len({canonical_form(g) for g in graphs}) == count


def test_labeled_counts_without_reduction():
    assert len(connected_graphs(3, reduce_isomorphs=False)) == 4
    assert len(connected_graphs(4, reduce_isomorphs=False)) == 38


def test_corpus_examples():
    small = list(corpus(CorpusSpec(max_n=3)))
    assert [g.n for g in small] == [1, 2, 3, 3]
    assert sorted(g.m for g in small if g.n == 3) == [2, 3]
    assert [g.n for g in corpus(CorpusSpec(max_n=1))] == [1]


def test_random_corpus_is_deterministic():
    spec = CorpusSpec(mode="random", max_n=10, samples=5, seed=42)
    a, b = list(corpus(spec)), list(corpus(spec))
    assert a == b and len(a) == 5
    assert all(g.n == 10 and len(g.packed.components(g.all)) == 1 for g in a)
    other = list(corpus(CorpusSpec(mode="random", max_n=10, samples=5, seed=43)))
    assert other != a


def test_canonical_form_is_label_invariant():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    h = from_edges(5, [(4, 3), (3, 2), (2, 1), (3, 0)])
    assert canonical_form(g) == canonical_form(h)
    assert canonical_form(g) != canonical_form(path(5))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"mode": "sideways"},
        {"mode": "random", "samples": 0},
        {"edge_probability": 1.0},
        {"mode": "random", "min_n": 9, "max_n": 8},
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(InputError):
        CorpusSpec(**kwargs)


def test_exhaustive_budget():
    with pytest.raises(BudgetError):
        CorpusSpec(max_n=8)
