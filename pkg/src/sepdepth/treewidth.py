"""Exact treewidth for small graphs, greedy bounds, decomposition checks.

Convention: the empty graph has treewidth -1.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from . import budgets
from ._kernels import treewidth_subsets
from .errors import InputError
from .graph import Graph, VertexSet, induced_subgraph, iter_bits


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass(frozen=True)
class TwBounds:
    lower: int
    upper: int
    upper_witness: tuple[int, ...]  # elimination order achieving ``upper``


def decomposition_from_order(g: Graph, order) -> TreeDecomposition:
    """Tree decomposition induced by eliminating vertices in ``order``."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise InputError("elimination order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    adj = list(g.adj)
    bags = []
    parent = []
    for i, v in enumerate(order):
        later = adj[v]
        bags.append(VertexSet(later | 1 << v))
        for u in iter_bits(later):
            adj[u] |= later & ~(1 << u)
            adj[u] &= ~(1 << v)
        parent.append(min((pos[u] for u in iter_bits(later)), default=None))
    edges = []
    roots = []
    for i, p in enumerate(parent):
        if p is None:
            roots.append(i)
        else:
            edges.append((p, i))
    # one root per component; chain them together
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(sorted(edges)))


def _local_adj(g: Graph, mask: int) -> dict[int, int]:
    return {v: g.adj[v] & mask for v in iter_bits(mask)}


def min_fill_order(g: Graph, mask: int | None = None) -> tuple[int, list[int]]:
    """Greedy min-fill on G[mask]; ties broken by degree, then vertex id."""
    if mask is None:
        mask = g.all
    adj = _local_adj(g, mask)

    def fill(v: int) -> int:
        nb = adj[v]
        missing = 0
        for u in iter_bits(nb):
            missing += (nb & ~adj[u]).bit_count() - 1
        return missing // 2

    heap = [(fill(v), adj[v].bit_count(), v) for v in adj]
    heapq.heapify(heap)
    current = {v: (f, d) for f, d, v in heap}
    order = []
    width = -1
    while heap:
        f, d, v = heapq.heappop(heap)
        if v not in adj or current[v] != (f, d):
            continue
        nb = adj.pop(v)
        width = max(width, nb.bit_count())
        order.append(v)
        touched = nb
        for u in iter_bits(nb):
            adj[u] = (adj[u] | nb) & ~(1 << u) & ~(1 << v)
        for u in iter_bits(nb):
            touched |= adj[u]
        for u in iter_bits(touched):
            if u in adj:
                key = (fill(u), adj[u].bit_count())
                if key != current[u]:
                    current[u] = key
                    heapq.heappush(heap, (key[0], key[1], u))
    return width, order


def treewidth_upper(g: Graph) -> tuple[int, list[int]]:
    """Min-fill elimination width and the order achieving it."""
    return min_fill_order(g)


def min_degree_lower(g: Graph, mask: int | None = None) -> int:
    """Largest minimum degree seen while repeatedly deleting a min-degree vertex."""
    if mask is None:
        mask = g.all
    if not mask:
        return -1
    adj = _local_adj(g, mask)
    heap = [(a.bit_count(), v) for v, a in adj.items()]
    heapq.heapify(heap)
    best = 0
    while heap:
        d, v = heapq.heappop(heap)
        if v not in adj or adj[v].bit_count() != d:
            continue
        best = max(best, d)
        nb = adj.pop(v)
        for u in iter_bits(nb):
            adj[u] &= ~(1 << v)
            heapq.heappush(heap, (adj[u].bit_count(), u))
    return best


def treewidth_lower(g: Graph) -> int:
    return min_degree_lower(g)


def bounds(g: Graph, mask: int | None = None) -> TwBounds:
    if mask is None:
        mask = g.all
    ub, order = min_fill_order(g, mask)
    return TwBounds(min_degree_lower(g, mask), ub, tuple(order))


def exact_width_of(g: Graph, mask: int) -> tuple[int, list[int]]:
    """Exact treewidth of G[mask] (connected or not) with an optimal order
    in original vertex ids. Budget is checked per component."""
    best = -1
    order: list[int] = []
    for comp in g.packed.components(mask):
        size = comp.bit_count()
        budgets.check("tw_exact", size, "treewidth_exact component")
        view = induced_subgraph(g, comp)
        ub, _ = min_fill_order(view.graph)
        w, local = treewidth_subsets(view.graph.adj, view.graph.n, ub)
        best = max(best, w)
        order.extend(view.order[i] for i in local)
    return best, order


def treewidth_exact(g: Graph) -> tuple[int, TreeDecomposition]:
    """Exact treewidth by subset DP, per connected component."""
    width, order = exact_width_of(g, g.all)
    td = decomposition_from_order(g, order)
    assert td.width == width
    return width, td


def verify_tree_decomposition(g: Graph, td: TreeDecomposition) -> bool:
    """Check the three decomposition properties and that the edges form a tree."""
    k = len(td.bags)
    for a, b in td.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise InputError(f"tree edge ({a}, {b}) does not join two of the {k} bags")
    for bag in td.bags:
        if bag.mask >> g.n:
            raise InputError(f"bag {bag!r} has vertices outside the graph")
    if k == 0:
        return g.n == 0
    if len(td.tree_edges) != k - 1:
        return False
    nbrs: list[list[int]] = [[] for _ in range(k)]
    for a, b in td.tree_edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for b in nbrs[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != k:
        return False
    covered = 0
    for bag in td.bags:
        covered |= bag.mask
    if covered != g.all:
        return False
    masks = [b.mask for b in td.bags]
    for u, v in g.edges():
        pair = 1 << u | 1 << v
        if not any(m & pair == pair for m in masks):
            return False
    for v in range(g.n):
        holding = [i for i, m in enumerate(masks) if m >> v & 1]
        inside = set(holding)
        reach = {holding[0]}
        stack = [holding[0]]
        while stack:
            for b in nbrs[stack.pop()]:
                if b in inside and b not in reach:
                    reach.add(b)
                    stack.append(b)
        if len(reach) != len(holding):
            return False
    return True
