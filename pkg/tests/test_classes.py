import pytest

from sepdepth.classes import (
    K4,
    K23,
    chordal_minimal_separators,
    clique_tree,
    detect_classes,
    has_minor,
    is_chordal,
    is_cograph,
    is_minor_model,
    is_outerplanar,
    is_perfect_elimination_order,
    k23_model,
    lex_bfs,
    minor_model_bruteforce,
    pattern_graph,
    verify_clique_tree,
)
from sepdepth.errors import BudgetError, DomainError, InputError
from sepdepth.generators import (
    complete,
    complete_bipartite,
    cycle,
    grid,
    path,
    random_cograph,
    random_ktree,
    random_maximal_outerplanar,
    star,
)
from sepdepth.graph import VertexSet, disjoint_union, from_edges
from sepdepth.oracle import CorpusSpec, corpus
from sepdepth.separators import enumerate_minimal_separators, minimal_separators_bruteforce
from sepdepth.treewidth import treewidth_exact

DIAMOND = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def test_is_chordal_examples():
    assert is_chordal(cycle(4)) is None
    assert is_chordal(complete(4)) is not None
    peo = is_chordal(star(5))
    assert peo is not None and is_perfect_elimination_order(star(5), peo)


def test_lex_bfs_is_a_permutation_starting_low():
    order = lex_bfs(grid(3, 3))
    assert sorted(order) == list(range(9)) and order[0] == 0


def test_clique_tree_examples():
    ct = clique_tree(path(4))
    assert [sorted(c) for c in ct.cliques] == [[0, 1], [1, 2], [2, 3]]
    assert sorted(sorted(inter) for _, _, inter in ct.tree_edges) == [[1], [2]]
    k4 = clique_tree(complete(4))
    assert len(k4.cliques) == 1 and k4.tree_edges == ()
    two = clique_tree(DIAMOND)
    assert len(two.cliques) == 2 and two.tree_edges[0][2] == {1, 2}
    assert verify_clique_tree(path(4), ct)
    assert verify_clique_tree(complete(4), k4)
    assert verify_clique_tree(DIAMOND, two)


def test_clique_tree_rejects_non_chordal():
    with pytest.raises(DomainError):
        clique_tree(cycle(5))


def test_clique_tree_disconnected():
    g = disjoint_union(path(3), complete(3))
    ct = clique_tree(g)
    assert verify_clique_tree(g, ct)
    assert chordal_minimal_separators(ct) == enumerate_minimal_separators(g)


def test_chordal_separator_examples():
    assert [sorted(s) for s in chordal_minimal_separators(clique_tree(path(4)))] == [[1], [2]]
    assert len(chordal_minimal_separators(clique_tree(complete(4)))) == 0
    kt = random_ktree(8, 2, seed=1)
    assert chordal_minimal_separators(clique_tree(kt)) == minimal_separators_bruteforce(kt)


@pytest.mark.parametrize("seed", range(25))
def test_ktree_clique_tree(seed):
    k = 1 + seed % 4
    g = random_ktree(10 + seed % 8, k, seed)
    ct = clique_tree(g)
    assert verify_clique_tree(g, ct)
    assert ct.max_clique_size() - 1 == treewidth_exact(g)[0] == k
    seps = chordal_minimal_separators(ct)
    assert seps == enumerate_minimal_separators(g)
    assert all(len(s) == k for s in seps)


def test_cograph_examples():
    assert not is_cograph(path(4))
    assert is_cograph(cycle(4))
    assert is_cograph(complete(6))
    assert is_cograph(from_edges(0, []))


def test_minor_examples():
    assert has_minor(complete(4), K4)
    assert not has_minor(cycle(5), K4)
    assert has_minor(complete_bipartite(2, 3), K23)
    assert not has_minor(path(6), K23)
    assert has_minor(grid(3, 3), K4)


def test_minor_errors(monkeypatch):
    with pytest.raises(InputError):
        has_minor(path(3), "K5")
    monkeypatch.setenv("SEPDEPTH_BUDGET", "minor=4")
    with pytest.raises(BudgetError):
        has_minor(path(5), K4)


def test_k23_model_is_valid():
    g = grid(3, 3)
    model = k23_model(g)
    assert model is not None and is_minor_model(g, pattern_graph(K23), model)


def test_is_minor_model_rejects():
    h = pattern_graph(K4)
    g = complete(4)
    assert is_minor_model(g, h, [{0}, {1}, {2}, {3}])
    assert not is_minor_model(g, h, [{0}, {1}, {2}, {2}])
    assert not is_minor_model(g, h, [{0}, {1}, {2}])
    assert not is_minor_model(cycle(4), h, [{0}, {1}, {2}, {3}])


def test_minor_checks_match_branch_set_search():
    for g in corpus(CorpusSpec(max_n=6)):
        for h in (K4, K23):
            want = minor_model_bruteforce(g, pattern_graph(h)) is not None
            assert has_minor(g, h) == want


def test_outerplanar_examples():
    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(complete_bipartite(2, 3))
    assert is_outerplanar(cycle(6))
    for seed in range(10):
        assert is_outerplanar(random_maximal_outerplanar(3 + seed % 8, seed))


@pytest.mark.parametrize("seed", range(15))
def test_cograph_td_is_tw_plus_one(seed):
    from sepdepth.solver import treedepth

    g = random_cograph(4 + seed % 8, seed)
    assert is_cograph(g)
    assert treedepth(g).td == treewidth_exact(g)[0] + 1


def test_detect_classes():
    assert detect_classes(path(5)) == ["chordal", "outerplanar", "forest"]
    assert detect_classes(complete(4)) == ["chordal", "cograph", "complete"]
    assert detect_classes(cycle(4)) == ["cograph", "outerplanar"]
    assert VertexSet([1]) in chordal_minimal_separators(clique_tree(path(3)))
