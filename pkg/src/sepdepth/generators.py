"""Graph families: basic shapes, the grid-plus-pendant-path constructions,
a two-terminal family with exponentially many minimal separators, and
seeded random chordal / cograph / outerplanar graphs.

Labelling of the grid constructions: grid vertex (i, j), 1 <= i <= n rows,
1 <= j <= m columns, is ``(i - 1) * m + (j - 1)``; pendant or connector path
vertices follow in construction order; hub vertices come last.
"""
from __future__ import annotations

import itertools
import random

from . import budgets
from .errors import InputError, ResourceError
from .graph import Graph, VertexSet, from_edges


class FamilyGraph(Graph):
    """A generated graph with named vertex groups (e.g. grid / paths / hubs)."""

    __slots__ = ("parts",)

    def __init__(self, n, adj, parts=None):
        super().__init__(n, adj)
        self.parts: dict[str, VertexSet] = dict(parts or {})


def _positive(**params) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise InputError(f"{name} must be a positive integer, got {value!r}")


def _fits(total: int, what: str) -> None:
    limit = budgets.get("vertex_set")
    if total > limit:
        raise ResourceError(f"{what} needs {total} vertices, over the vertex_set budget of {limit}")


def _build(total: int, edges, parts=None) -> FamilyGraph:
    g = from_edges(total, edges)
    return FamilyGraph(g.n, g.adj, parts)


def path(n: int) -> Graph:
    _positive(n=n)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise InputError(f"cycle needs n >= 3, got {n!r}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive(n=n)
    return from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides are 0..a-1 and a..a+b-1."""
    _positive(a=a, b=b)
    return from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(leaves: int) -> Graph:
    _positive(leaves=leaves)
    return from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def _grid_edges(n: int, m: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(n):
        for j in range(m):
            v = i * m + j
            if j + 1 < m:
                edges.append((v, v + 1))
            if i + 1 < n:
                edges.append((v, v + m))
    return edges


def grid_vertex(m: int, i: int, j: int) -> int:
    """Id of grid vertex (i, j) (both 1-based) in an n x m construction."""
    return (i - 1) * m + (j - 1)


def grid(n: int, m: int) -> Graph:
    """n rows by m columns, orthogonal neighbours adjacent."""
    _positive(n=n, m=m)
    _fits(n * m, "grid")
    return from_edges(n * m, _grid_edges(n, m))


def basic(kind: str, *params: int) -> Graph:
    makers = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "grid": grid,
    }
    if kind not in makers:
        raise InputError(f"unknown basic family {kind!r}")
    try:
        return makers[kind](*params)
    except TypeError as exc:
        raise InputError(f"{kind}: {exc}") from None


def _pendants(n: int, m: int, k: int, columns: tuple[int, ...], what: str) -> FamilyGraph:
    _positive(n=n, m=m, k=k)
    plen = (1 << k) - 1
    total = n * m + len(columns) * n * plen
    _fits(total, what)
    edges = _grid_edges(n, m)
    nxt = n * m
    for i in range(1, n + 1):
        for j in columns:
            first = nxt
            edges.append((grid_vertex(m, i, j), first))
            edges.extend((first + t, first + t + 1) for t in range(plen - 1))
            nxt += plen
    parts = {"grid": VertexSet(range(n * m)), "paths": VertexSet(range(n * m, total))}
    return _build(total, edges, parts)


def broom(n: int, m: int, k: int) -> FamilyGraph:
    """Grid with a pendant path of 2^k - 1 vertices at every (i, m)."""
    _positive(n=n, m=m, k=k)
    return _pendants(n, m, k, (m,), "broom")


def double_broom(n: int, m: int, k: int) -> FamilyGraph:
    """Grid with pendant paths of 2^k - 1 vertices at every (i, 1) and (i, m)."""
    _positive(n=n, m=m, k=k)
    if m < 2:
        raise InputError("double_broom needs m >= 2 so that columns 1 and m differ")
    return _pendants(n, m, k, (1, m), "double_broom")


def corner_graph(n: int, m: int, k: int, l: int) -> FamilyGraph:
    """Grid plus ``l`` hubs; every boundary vertex (i, 1), (i, m) is joined to
    every hub by its own path of 2^k - 1 vertices."""
    _positive(n=n, m=m, k=k)
    if m < 2:
        raise InputError("corner_graph needs m >= 2")
    if not isinstance(l, int) or l < 0:
        raise InputError(f"l must be a non-negative integer, got {l!r}")
    plen = (1 << k) - 1
    total = n * m + l + 2 * n * l * plen
    _fits(total, "corner_graph")
    hubs = list(range(total - l, total))
    edges = _grid_edges(n, m)
    nxt = n * m
    for i in range(1, n + 1):
        for j in (1, m):
            for w in hubs:
                first = nxt
                last = first + plen - 1
                edges.append((grid_vertex(m, i, j), first))
                edges.extend((first + t, first + t + 1) for t in range(plen - 1))
                edges.append((last, w))
                nxt += plen
    parts = {
        "grid": VertexSet(range(n * m)),
        "paths": VertexSet(range(n * m, total - l)),
        "hubs": VertexSet(hubs),
    }
    return _build(total, edges, parts)


def exp_sep_graph(k: int) -> FamilyGraph:
    """Terminals a=0, b=1 joined by k paths a - x_i - y_i - b with
    x_i = 2i and y_i = 2i + 1."""
    _positive(k=k)
    total = 2 + 2 * k
    _fits(total, "exp_sep_graph")
    edges = []
    for i in range(1, k + 1):
        x, y = 2 * i, 2 * i + 1
        edges += [(0, x), (x, y), (y, 1)]
    parts = {"terminals": VertexSet([0, 1]), "inner": VertexSet(range(2, total))}
    return _build(total, edges, parts)


def random_ktree(n: int, k: int, seed: int) -> Graph:
    """Start from K_{k+1}; attach each new vertex to a uniformly chosen k-clique."""
    if not (isinstance(k, int) and isinstance(n, int) and 1 <= k < n):
        raise InputError(f"ktree needs 1 <= k < n, got n={n!r}, k={k!r}")
    _fits(n, "ktree")
    rng = random.Random(seed)
    edges = list(itertools.combinations(range(k + 1), 2))
    cliques = [c for c in itertools.combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in base)
        for drop in range(k):
            cliques.append(base[:drop] + base[drop + 1:] + (v,))
    return from_edges(n, edges)


def random_cograph(n: int, seed: int, join_probability: float = 0.5) -> Graph:
    """Random binary cotree with ``n`` leaves; internal nodes are disjoint
    union or join (all edges across) with the given probability."""
    _positive(n=n)
    if not 0 <= join_probability <= 1:
        raise InputError("join_probability must lie in [0, 1]")
    _fits(n, "cograph")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []

    def grow(lo: int, hi: int) -> None:
        if hi - lo == 1:
            return
        mid = rng.randint(lo + 1, hi - 1)
        grow(lo, mid)
        grow(mid, hi)
        if rng.random() < join_probability:
            edges.extend((u, v) for u in range(lo, mid) for v in range(mid, hi))

    grow(0, n)
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_maximal_outerplanar(n: int, seed: int) -> Graph:
    """Triangulated polygon: repeatedly clip a uniformly random ear, then
    shuffle the labels. Has 2n - 3 edges for n >= 2."""
    _positive(n=n)
    _fits(n, "maximal_outerplanar")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)] if n >= 3 else [(0, 1)] if n == 2 else []
    poly = list(range(n))
    while len(poly) > 3:
        i = rng.randrange(len(poly))
        edges.append((poly[i - 1], poly[(i + 1) % len(poly)]))
        del poly[i]
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_family(kind: str, n: int, param=None, seed: int = 0) -> Graph:
    """``param``: k for ktree, join probability for cograph, unused otherwise."""
    if kind == "ktree":
        if param is None:
            raise InputError("ktree needs param k")
        return random_ktree(n, param, seed)
    if kind == "cograph":
        return random_cograph(n, seed, 0.5 if param is None else param)
    if kind == "maximal_outerplanar":
        return random_maximal_outerplanar(n, seed)
    raise InputError(f"unknown random family {kind!r}")
