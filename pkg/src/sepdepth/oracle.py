"""Brute-force ground truth on tiny graphs and the test-corpus generators.

Everything here is deliberately independent of the separator-based solver.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from . import budgets
from ._kernels import treedepth_subsets
from .errors import InputError
from .graph import Graph, iter_bits


def treedepth_bruteforce(g: Graph) -> int:
    """td(empty) = 0, max over components, 1 + min over v of td(G - v)."""
    budgets.check("oracle_td", g.n, "treedepth_bruteforce")
    return treedepth_subsets(g.adj, g.n)


def treewidth_bruteforce(g: Graph) -> int:
    """Minimum elimination width over all n! vertex orderings."""
    budgets.check("oracle_tw", g.n, "treewidth_bruteforce")
    if g.n == 0:
        return -1
    best = g.n - 1
    for order in itertools.permutations(range(g.n)):
        adj = list(g.adj)
        width = 0
        for v in order:
            nb = adj[v]
            d = nb.bit_count()
            if d > width:
                width = d
                if width >= best:
                    break
            for u in iter_bits(nb):
                adj[u] = (adj[u] | nb) & ~(1 << u) & ~(1 << v)
        else:
            best = min(best, width)
    return best


@dataclass(frozen=True)
class CorpusSpec:
    mode: str = "exhaustive_connected"  # or "random"
    max_n: int = 7
    samples: int = 1
    seed: int = 0
    edge_probability: float = 0.5
    min_n: int | None = None  # random mode: sizes drawn from [min_n, max_n]
    reduce_isomorphs: bool = True
    max_retries: int = 10_000

    def __post_init__(self):
        if self.mode not in ("exhaustive_connected", "random"):
            raise InputError(f"unknown corpus mode {self.mode!r}")
        if self.mode == "exhaustive_connected":
            budgets.check("corpus_exhaustive", self.max_n, "exhaustive corpus")
        elif self.samples < 1:
            raise InputError("random corpus needs samples >= 1")
        if not 0 < self.edge_probability < 1:
            raise InputError("edge_probability must lie in (0, 1)")
        if self.max_n < 1 or (self.min_n is not None and not 1 <= self.min_n <= self.max_n):
            raise InputError("need 1 <= min_n <= max_n")


def _refined_cells(n: int, adj) -> list[list[int]]:
    """Colour refinement; returns vertex cells in a canonical order."""
    colour = [adj[v].bit_count() for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in iter_bits(adj[v])))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant code: the minimum relabelled adjacency tuple
    over orderings compatible with the refined colour classes."""
    cells = _refined_cells(g.n, g.adj)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sum(1 << pos[u] for u in iter_bits(g.adj[v])) for v in order)
        if best is None or code < best:
            best = code
    return best if best is not None else ()


def _relabel(g: Graph, code: tuple[int, ...]) -> Graph:
    return Graph(len(code), code)


def _connected(adj: list[int], n: int) -> bool:
    if n == 0:
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def connected_graphs(n: int, reduce_isomorphs: bool = True) -> list[Graph]:
    """Connected graphs on exactly ``n`` vertices.

    Reduced mode grows every class from the classes on n-1 vertices (each
    connected graph has a vertex whose removal keeps it connected) and keeps
    one canonical representative per isomorphism class.
    """
    if n == 1:
        return [Graph(1, [0])]
    if not reduce_isomorphs:
        pairs = list(itertools.combinations(range(n), 2))
        out = []
        for bits in range(1 << len(pairs)):
            adj = [0] * n
            for i, (u, v) in enumerate(pairs):
                if bits >> i & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            if _connected(adj, n):
                out.append(Graph(n, adj))
        return out
    found: dict[tuple[int, ...], Graph] = {}
    for h in connected_graphs(n - 1, True):
        for nb in range(1, 1 << (n - 1)):
            adj = list(h.adj) + [nb]
            for u in iter_bits(nb):
                adj[u] |= 1 << (n - 1)
            g = Graph(n, adj)
            code = canonical_form(g)
            if code not in found:
                found[code] = _relabel(g, code)
    return [found[c] for c in sorted(found)]


def random_connected_graph(rng: random.Random, n: int, p: float, max_retries: int = 10_000) -> Graph:
    for _ in range(max_retries):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        if _connected(adj, n):
            return Graph(n, adj)
    raise InputError(f"no connected G({n}, {p}) sample after {max_retries} tries")


def corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Deterministic stream of graphs described by ``spec``.

    Random mode uses :class:`random.Random` (Mersenne Twister) seeded with
    ``spec.seed``: each sample draws n uniformly from [min_n, max_n], then
    every pair independently with probability p, resampling until connected.
    """
    if spec.mode == "exhaustive_connected":
        for n in range(1, spec.max_n + 1):
            yield from connected_graphs(n, spec.reduce_isomorphs)
        return
    rng = random.Random(spec.seed)
    lo = spec.max_n if spec.min_n is None else spec.min_n
    for _ in range(spec.samples):
        n = rng.randint(lo, spec.max_n)
        yield random_connected_graph(rng, n, spec.edge_probability, spec.max_retries)
