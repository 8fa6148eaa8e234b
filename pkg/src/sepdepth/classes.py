"""Chordal graphs and clique trees, cographs, K4 / K_{2,3} minors, outerplanarity."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from . import budgets
from .errors import DomainError, InputError
from .graph import Graph, VertexSet, complement, is_clique, iter_bits
from .separators import SeparatorSet


# chordal graphs


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties go to the lowest vertex id."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    unvisited = set(range(g.n))
    order = []
    for step in range(g.n, 0, -1):
        v = max(unvisited, key=lambda u: (labels[u], -u))
        unvisited.remove(v)
        order.append(v)
        for u in iter_bits(g.adj[v]):
            if u in unvisited:
                labels[u].append(step)
    return order


def is_perfect_elimination_order(g: Graph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in iter_bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        rest = 0
        for u in later:
            if u != first:
                rest |= 1 << u
        if rest & ~g.adj[first]:
            return False
    return True


def is_chordal(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when G has a chordless cycle."""
    peo = lex_bfs(g)[::-1]
    return peo if is_perfect_elimination_order(g, peo) else None


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques plus tree edges ``(i, j, cliques[i] & cliques[j])``."""

    cliques: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int, VertexSet], ...]

    def max_clique_size(self) -> int:
        return max((len(c) for c in self.cliques), default=0)


def maximal_cliques_chordal(g: Graph, peo) -> list[int]:
    pos = {v: i for i, v in enumerate(peo)}
    cand = []
    for v in peo:
        c = 1 << v
        for u in iter_bits(g.adj[v]):
            if pos[u] > pos[v]:
                c |= 1 << u
        cand.append(c)
    cand = set(cand)
    return [c for c in cand if not any(c != d and c & ~d == 0 for d in cand)]


def clique_tree(g: Graph) -> CliqueTree:
    """Maximal cliques from a PEO joined by a maximum-weight spanning tree
    (weight = intersection size). Components of a disconnected graph are
    chained with empty-intersection edges."""
    peo = is_chordal(g)
    if peo is None:
        raise DomainError("clique_tree needs a chordal graph")
    cliques = sorted(maximal_cliques_chordal(g, peo), key=lambda c: tuple(iter_bits(c)))
    k = len(cliques)
    pairs = sorted(
        ((-(cliques[i] & cliques[j]).bit_count(), i, j) for i in range(k) for j in range(i + 1, k))
    )
    root = list(range(k))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, i, j in pairs:
        a, b = find(i), find(j)
        if a != b:
            root[a] = b
            edges.append((i, j, VertexSet(cliques[i] & cliques[j])))
    return CliqueTree(tuple(VertexSet(c) for c in cliques), tuple(edges))


def verify_clique_tree(g: Graph, ct: CliqueTree) -> bool:
    masks = [c.mask for c in ct.cliques]
    for c in masks:
        if not is_clique(g, c):
            return False
        # maximal: no outside vertex adjacent to all of c
        common = g.all & ~c
        for v in iter_bits(c):
            common &= g.adj[v]
        if common:
            return False
    if len(ct.tree_edges) != max(len(masks) - 1, 0):
        return False
    nbrs: list[list[int]] = [[] for _ in masks]
    for i, j, inter in ct.tree_edges:
        if inter.mask != masks[i] & masks[j]:
            return False
        nbrs[i].append(j)
        nbrs[j].append(i)
    for v in range(g.n):
        holding = {i for i, c in enumerate(masks) if c >> v & 1}
        if not holding:
            return False
        start = min(holding)
        seen = {start}
        stack = [start]
        while stack:
            for j in nbrs[stack.pop()]:
                if j in holding and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if seen != holding:
            return False
    return True


def chordal_minimal_separators(ct: CliqueTree) -> SeparatorSet:
    """Distinct non-empty intersections along clique-tree edges."""
    return SeparatorSet.from_masks(inter.mask for _, _, inter in ct.tree_edges if inter.mask)


# cographs


def is_cograph(g: Graph) -> bool:
    """Every induced subgraph on >= 2 vertices is disconnected or has a
    disconnected complement."""
    pk = g.packed
    co = complement(g).packed

    def rec(mask: int) -> bool:
        if mask.bit_count() <= 1:
            return True
        parts = pk.components(mask)
        if len(parts) == 1:
            parts = co.components(mask)
            if len(parts) == 1:
                return False
        return all(rec(p) for p in parts)

    return rec(g.all)


# minors

K4 = "K4"
K23 = "K23"


def _has_k4_minor(g: Graph) -> bool:
    """Series-parallel reduction: drop degree <= 1 vertices and suppress
    degree-2 vertices; a K4 minor exists iff a min-degree-3 core survives."""
    adj = {v: g.adj[v] for v in range(g.n)}
    queue = deque(v for v in adj if adj[v].bit_count() <= 2)
    while queue:
        v = queue.popleft()
        if v not in adj or adj[v].bit_count() > 2:
            continue
        nb = adj.pop(v)
        for u in iter_bits(nb):
            adj[u] &= ~(1 << v)
        if nb.bit_count() == 2:
            a, b = iter_bits(nb)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        for u in iter_bits(nb):
            if adj[u].bit_count() <= 2:
                queue.append(u)
    return bool(adj)


def _disjoint_paths(g: Graph, a: int, b: int, want: int) -> list[list[int]]:
    """Up to ``want`` internally disjoint a-b paths avoiding the edge ab
    (vertex splitting plus augmenting paths)."""
    # node 2v is v_in, 2v + 1 is v_out
    cap: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(x: int, y: int, c: int) -> None:
        cap[(x, y)] = c
        nbrs[x].append(y)
        nbrs[y].append(x)

    for v in range(g.n):
        arc(2 * v, 2 * v + 1, want if v in (a, b) else 1)
    for u, v in g.edges():
        if {u, v} != {a, b}:
            arc(2 * u + 1, 2 * v, 1)
            arc(2 * v + 1, 2 * u, 1)
    flow: dict[tuple[int, int], int] = dict.fromkeys(cap, 0)

    def residual(x: int, y: int) -> int:
        return cap.get((x, y), 0) - flow.get((x, y), 0) + flow.get((y, x), 0)

    src, dst = 2 * a + 1, 2 * b
    found = 0
    while found < want:
        prev = {src: src}
        q = deque([src])
        while q and dst not in prev:
            x = q.popleft()
            for y in nbrs[x]:
                if y not in prev and residual(x, y) > 0:
                    prev[y] = x
                    q.append(y)
        if dst not in prev:
            break
        y = dst
        while y != src:
            x = prev[y]
            if flow.get((y, x), 0) > 0:
                flow[(y, x)] -= 1
            else:
                flow[(x, y)] += 1
            y = x
        found += 1
    paths = []
    for _ in range(found):
        walk = [a]
        x = src
        while x != dst:
            y = next(y for y in nbrs[x] if flow.get((x, y), 0) > 0)
            flow[(x, y)] -= 1
            if y % 2 == 0:
                walk.append(y // 2)
            x = y
        paths.append(walk)
    return paths


def k23_model(g: Graph) -> list[VertexSet] | None:
    """Branch sets [{a}, {b}, P1, P2, P3] of a K_{2,3} minor, or None.

    K_{2,3} has maximum degree 3, so it is a minor iff some pair a, b is
    joined by three internally disjoint paths of length >= 2.
    """
    for a, b in itertools.combinations(range(g.n), 2):
        deg_a = g.degree(a) - g.has_edge(a, b)
        deg_b = g.degree(b) - g.has_edge(a, b)
        if deg_a < 3 or deg_b < 3:
            continue
        paths = _disjoint_paths(g, a, b, 3)
        if len(paths) == 3:
            return [VertexSet([a]), VertexSet([b])] + [VertexSet(p[1:-1]) for p in paths]
    return None


def has_minor(g: Graph, h: str) -> bool:
    """Whether G contains K4 or K_{2,3} as a minor."""
    budgets.check("minor", g.n, "has_minor")
    if h == K4:
        return _has_k4_minor(g)
    if h == K23:
        return k23_model(g) is not None
    raise InputError(f"unsupported minor {h!r}; expected 'K4' or 'K23'")


def pattern_graph(h: str) -> Graph:
    from .generators import complete, complete_bipartite

    if h == K4:
        return complete(4)
    if h == K23:
        return complete_bipartite(2, 3)
    raise InputError(f"unsupported minor {h!r}")


def is_minor_model(g: Graph, h: Graph, branch_sets) -> bool:
    """Disjoint, non-empty, connected branch sets with every H-edge realised."""
    masks = [VertexSet(b).mask if not isinstance(b, int) else b for b in branch_sets]
    if len(masks) != h.n or any(m == 0 for m in masks):
        return False
    seen = 0
    for m in masks:
        if m & seen or m >> g.n:
            return False
        seen |= m
        if len(g.packed.components(m)) != 1:
            return False
    for i, j in h.edges():
        if not g.packed.neighborhood(masks[i]) & masks[j]:
            return False
    return True


def minor_model_bruteforce(g: Graph, h: Graph) -> list[VertexSet] | None:
    """Exhaustive branch-set search over connected vertex subsets (tiny G only)."""
    if g.n > 10:
        raise InputError("minor_model_bruteforce is limited to 10 vertices")
    pk = g.packed
    connected = [m for m in range(1, 1 << g.n) if len(pk.components(m)) == 1]
    nbr = {m: pk.neighborhood(m) for m in connected}
    need = [[j for j in range(i) if h.has_edge(i, j)] for i in range(h.n)]
    chosen: list[int] = []

    def place(i: int, used: int) -> bool:
        if i == h.n:
            return True
        for m in connected:
            if m & used:
                continue
            if all(nbr[m] & chosen[j] for j in need[i]):
                chosen.append(m)
                if place(i + 1, used | m):
                    return True
                chosen.pop()
        return False

    if place(0, 0):
        return [VertexSet(m) for m in chosen]
    return None


def is_outerplanar(g: Graph) -> bool:
    """No K4 and no K_{2,3} minor."""
    return not has_minor(g, K4) and not has_minor(g, K23)


def detect_classes(g: Graph) -> list[str]:
    """Names of the recognised classes G belongs to."""
    found = []
    if is_chordal(g) is not None:
        found.append("chordal")
    if is_cograph(g):
        found.append("cograph")
    if g.n <= budgets.get("minor") and is_outerplanar(g):
        found.append("outerplanar")
    if g.n and g.m == g.n - len(g.packed.components(g.all)):
        found.append("forest")
    if is_clique(g, g.all):
        found.append("complete")
    return found
