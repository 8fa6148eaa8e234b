import random

import pytest

from sepdepth._kernels import BACKEND, _pure
from sepdepth.graph import from_edges
from sepdepth.oracle import random_connected_graph

try:
    from sepdepth._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def random_graphs(count, lo, hi, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(lo, hi)
        yield random_connected_graph(rng, n, rng.uniform(0.15, 0.7))


def test_backend_name():
    assert BACKEND in ("cython", "python")


def test_pure_kernels_small_cases():
    assert _pure.treedepth_subsets([], 0) == 0
    w, order = _pure.treewidth_subsets([], 0)
    assert w == -1 and order == []
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert _pure.treedepth_subsets(list(g.adj), 4) == 3
    assert _pure.treewidth_subsets(list(g.adj), 4)[0] == 2


@needs_c
def test_backends_agree_on_components_and_neighborhoods():
    for g in random_graphs(60, 5, 70, seed=1):
        py, cy = _pure.PackedGraph(list(g.adj)), _ckernels.PackedGraph(list(g.adj))
        rng = random.Random(g.m)
        for _ in range(10):
            mask = rng.getrandbits(g.n)
            assert py.components(mask) == cy.components(mask)
            assert py.neighborhood(mask) == cy.neighborhood(mask)


@needs_c
def test_backends_agree_on_subset_dp():
    for g in random_graphs(60, 1, 11, seed=2):
        adj = list(g.adj)
        assert _pure.treedepth_subsets(adj, g.n) == _ckernels.treedepth_subsets(adj, g.n)
        assert _pure.treewidth_subsets(adj, g.n)[0] == _ckernels.treewidth_subsets(adj, g.n)[0]
