import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepdepth.errors import BudgetError, InputError
from sepdepth.generators import complete, cycle, path, star
from sepdepth.graph import (
    Graph,
    VertexSet,
    complement,
    connected_components,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_complete,
    open_neighborhood,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


def test_from_edges_single_edge():
    g = from_edges(2, [(0, 1)])
    assert g.m == 1 and g.edges() == [(0, 1)]


def test_from_edges_c4():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g == cycle(4)
    assert all(g.degree(v) == 2 for v in range(4))


def test_from_edges_deduplicates():
    assert from_edges(3, [(0, 1), (0, 1)]).m == 1
    assert from_edges(3, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 2)], [(-1, 0)], [(1, 1)], [(0,)], [(0, 1, 2)]])
def test_from_edges_rejects(edges):
    with pytest.raises(InputError):
        from_edges(2, edges)


def test_vertex_budget(monkeypatch):
    monkeypatch.setenv("SEPDEPTH_BUDGET", "vertex_set=5")
    with pytest.raises(BudgetError):
        from_edges(6, [])
    monkeypatch.setenv("SEPDEPTH_BUDGET", "vertex_set=oops")
    with pytest.raises(InputError):
        from_edges(2, [])


def test_empty_graph_is_legal():
    g = from_edges(0, [])
    assert g.n == 0 and g.m == 0 and connected_components(g) == []
    assert is_complete(g)


def test_induced_subgraph_examples():
    view = induced_subgraph(cycle(4), VertexSet([0, 1, 2]))
    assert view.graph == path(3)
    g = cycle(5)
    assert induced_subgraph(g, g.vertices()).graph == g
    assert induced_subgraph(complete(4), {0, 1}).graph == complete(2)


def test_induced_subgraph_relabels():
    g = path(5)
    view = induced_subgraph(g, {1, 3, 4})
    assert view.order == (1, 3, 4)
    assert view.graph.edges() == [(1, 2)]
    assert view.to_parent(1) == 3 and view.to_local(4) == 2


def test_induced_subgraph_out_of_range():
    with pytest.raises(InputError):
        induced_subgraph(path(3), {0, 5})


def test_connected_components_examples():
    assert connected_components(path(4)) == [VertexSet(range(4))]
    assert connected_components(from_edges(4, [(0, 1), (2, 3)])) == [{0, 1}, {2, 3}]
    assert connected_components(from_edges(1, [])) == [{0}]


def test_open_neighborhood_examples():
    assert open_neighborhood(star(3), {0}) == {1, 2, 3}
    assert open_neighborhood(cycle(4), {1}) == {0, 2}
    g = path(4)
    assert open_neighborhood(g, g.vertices()) == set()


def test_is_complete_examples():
    assert is_complete(complete(4))
    assert not is_complete(cycle(4))
    assert is_complete(from_edges(1, []))


class TestVertexSet:
    def test_value_semantics(self):
        a = VertexSet([3, 1])
        assert a == VertexSet(0b1010) == {1, 3}
        assert hash(a) == hash(VertexSet([1, 3]))
        assert list(a) == [1, 3] and len(a) == 2 and 3 in a and 2 not in a

    def test_immutable(self):
        with pytest.raises(AttributeError):
            VertexSet([1]).mask = 3

    def test_order_is_size_then_lex(self):
        sets = [VertexSet(s) for s in ([2, 3], [4], [1, 5], [0, 9, 1])]
        assert [list(s) for s in sorted(sets)] == [[4], [1, 5], [2, 3], [0, 1, 9]]

    def test_set_algebra(self):
        a, b = VertexSet([1, 2]), VertexSet([2, 3])
        assert a | b == {1, 2, 3} and a & b == {2} and a - b == {1}
        assert (a & b).issubset(a)

    def test_rejects_bad_members(self):
        with pytest.raises(InputError):
            VertexSet([-1])
        with pytest.raises(InputError):
            VertexSet(["x"])


@given(graphs())
def test_graph_is_symmetric_and_edges_sorted(g):
    assert g.is_symmetric()
    assert g.edges() == sorted(g.edges())
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    covered = 0
    for c in comps:
        assert covered & c.mask == 0
        covered |= c.mask
        assert open_neighborhood(g, c) == set()
    assert covered == g.all


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@settings(max_examples=50)
@given(graphs(5), graphs(5))
def test_disjoint_union_components(g, h):
    u = disjoint_union(g, h)
    assert u.n == g.n + h.n and u.m == g.m + h.m
    assert len(connected_components(u)) == len(connected_components(g)) + len(connected_components(h))


def test_graph_is_hashable_value():
    assert len({path(3), from_edges(3, [(1, 0), (2, 1)])}) == 1
    assert isinstance(path(3), Graph)
