"""Exact treedepth through the minimal-separator recurrence.

For a connected subgraph H (keyed by its vertex mask in the input graph)::

    td(H) = |H|                                   if H is a clique
    td(H) = min_S |S| + max_C td(C)               otherwise

with S over the minimal separators of H and C over the components of H - S.
The search is a memoized branch and bound: ``_search(mask, limit)`` returns
the exact value when it is below ``limit`` and otherwise some proven lower
bound that is at least ``limit``.

With ``pruning="two_tw"`` only separators of size at most twice a treewidth
upper bound of H are generated. Some optimal separator always satisfies this,
and since candidates are tried in (size, lexicographic) order the first
optimal separator is the same in both modes, so the decompositions agree.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field

from . import budgets
from .errors import DomainError, InputError, ResourceError
from .graph import Graph, VertexSet, is_clique, iter_bits
from .separators import SeparatorSet, close_separators
from .treewidth import exact_width_of, min_degree_lower, min_fill_order

PRUNING_MODES = ("two_tw", "none")
TW_MODES = ("exact_within_budget", "heuristic_only")


@dataclass(frozen=True)
class SolveConfig:
    pruning: str = "two_tw"
    tw_mode: str = "exact_within_budget"
    memo_limit: int | None = None

    def __post_init__(self):
        if self.pruning not in PRUNING_MODES:
            raise InputError(f"pruning must be one of {PRUNING_MODES}, got {self.pruning!r}")
        if self.tw_mode not in TW_MODES:
            raise InputError(f"tw_mode must be one of {TW_MODES}, got {self.tw_mode!r}")
        if self.memo_limit is not None and self.memo_limit < 1:
            raise InputError("memo_limit must be positive")


@dataclass
class SolveStats:
    subproblems: int = 0  # connected subgraphs searched (cache misses)
    separators_enumerated: int = 0  # candidates generated by the enumerator
    separators_pruned: int = 0  # of those, dropped by the 2*tw size rule
    max_separator_size: int = 0  # largest separator actually branched on
    tw_bound_violations: int = 0  # branched separators above 2*tw bound; stays 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


@dataclass(frozen=True)
class TreedepthDecomposition:
    """Rooted forest given as a parent array (``None`` marks a root)."""

    parent: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def height(self) -> int:
        return forest_height(self.parent)

    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return kids


def _depths(parent) -> list[int] | None:
    """Depth of every vertex (roots have depth 1); None if not a forest."""
    n = len(parent)
    depth = [0] * n
    for v in range(n):
        chain = []
        u = v
        while u is not None and depth[u] == 0:
            if len(chain) > n:
                return None
            chain.append(u)
            u = parent[u]
        base = 0 if u is None else depth[u]
        for w in reversed(chain):
            base += 1
            depth[w] = base
    return depth


def forest_height(parent) -> int:
    depth = _depths(parent)
    if depth is None:
        raise DomainError("parent array contains a cycle")
    return max(depth, default=0)


@dataclass
class TreedepthResult:
    td: int
    decomposition: TreedepthDecomposition
    stats: SolveStats

    def __iter__(self):
        return iter((self.td, self.decomposition, self.stats))


class _Search:
    def __init__(self, g: Graph, cfg: SolveConfig):
        self.g = g
        self.pk = g.packed
        self.cfg = cfg
        self.exact: dict[int, tuple[int, int]] = {}  # mask -> (td, chosen separator; 0 for cliques)
        self.lower: dict[int, int] = {}  # mask -> proven lower bound
        self.cands: dict[int, tuple[list[int], int]] = {}  # mask -> (separators, size threshold)
        self.stats = SolveStats()

    # bounds

    def _path_bound(self, mask: int) -> int:
        """td lower bound from a long path found by two DFS sweeps."""
        adj = self.g.adj

        def deepest(start: int) -> tuple[int, int]:
            best_v, best_d = start, 1
            seen = 1 << start
            stack = [(start, adj[start] & mask)]
            while stack:
                v, todo = stack[-1]
                todo &= ~seen
                if not todo:
                    stack.pop()
                    continue
                low = todo & -todo
                stack[-1] = (v, todo ^ low)
                u = low.bit_length() - 1
                seen |= low
                stack.append((u, adj[u] & mask))
                if len(stack) > best_d:
                    best_v, best_d = u, len(stack)
            return best_v, best_d

        far, _ = deepest((mask & -mask).bit_length() - 1)
        _, length = deepest(far)
        # a path on L vertices has treedepth ceil(log2(L + 1))
        return length.bit_length()

    def lower_bound(self, mask: int) -> int:
        hit = self.exact.get(mask)
        if hit is not None:
            return hit[0]
        lb = self.lower.get(mask)
        if lb is None:
            size = mask.bit_count()
            if size <= 2:
                lb = size
            else:
                lb = max(min_degree_lower(self.g, mask) + 1, self._path_bound(mask))
            self.lower[mask] = lb
        return lb

    def tw_bound(self, mask: int) -> int:
        """Treewidth upper bound of G[mask] for the pruning threshold."""
        lo = min_degree_lower(self.g, mask)
        hi, _ = min_fill_order(self.g, mask)
        if lo == hi or self.cfg.tw_mode == "heuristic_only":
            return hi
        if mask.bit_count() <= budgets.get("tw_exact"):
            return exact_width_of(self.g, mask)[0]
        return hi

    # search

    def candidates(self, mask: int) -> tuple[list[int], int]:
        got = self.cands.get(mask)
        if got is not None:
            return got
        if self.cfg.pruning == "two_tw":
            threshold = 2 * self.tw_bound(mask)
            res = close_separators(self.g, mask, threshold, aggressive=True)
            self.stats.separators_pruned += res.discarded
        else:
            threshold = mask.bit_count()
            res = close_separators(self.g, mask)
        self.stats.separators_enumerated += res.generated
        got = (res.kept, threshold)
        self.cands[mask] = got
        return got

    def _check_memo(self) -> None:
        limit = self.cfg.memo_limit
        if limit is not None and len(self.exact) + len(self.lower) > limit:
            raise ResourceError(f"memo table exceeded {limit} entries", self.stats)

    def search(self, mask: int, limit: int) -> int:
        hit = self.exact.get(mask)
        if hit is not None:
            return hit[0]
        size = mask.bit_count()
        if is_clique(self.g, mask):
            self.exact[mask] = (size, 0)
            self.lower.pop(mask, None)
            self._check_memo()
            return size
        lb = self.lower_bound(mask)
        if lb >= limit:
            return lb
        self._check_memo()
        self.stats.subproblems += 1
        seps, threshold = self.candidates(mask)
        pk = self.pk
        best = limit
        best_sep = 0
        for sep in seps:
            s = sep.bit_count()
            if s + 1 >= best:
                break
            budget = best - s
            comps = pk.components(mask & ~sep)
            if any(self.lower_bound(c) >= budget for c in comps):
                continue
            comps.sort(key=lambda c: -self.lower_bound(c))
            worst = 0
            for c in comps:
                r = self.search(c, budget)
                if r >= budget:
                    worst = -1
                    break
                worst = max(worst, r)
            if worst < 0:
                continue
            if s > self.stats.max_separator_size:
                self.stats.max_separator_size = s
            if s > threshold:
                self.stats.tw_bound_violations += 1
            if s + worst < best:
                best = s + worst
                best_sep = sep
                if best <= lb:
                    break
        if best_sep:
            self.exact[mask] = (best, best_sep)
            self.lower.pop(mask, None)
            return best
        self.lower[mask] = max(lb, limit)
        return self.lower[mask]

    def solve_connected(self, mask: int) -> int:
        t = self.lower_bound(mask)
        while True:
            r = self.search(mask, t + 1)
            if r <= t:
                return r
            t = r

    def solve(self, mask: int) -> int:
        return max((self.solve_connected(c) for c in self.pk.components(mask)), default=0)

    def build(self, mask: int, parent: list[int | None], above: int | None) -> None:
        """Write the decomposition of connected ``mask`` under ``above``."""
        _, sep = self.exact[mask]
        chain = sep if sep else mask
        for v in iter_bits(chain):
            parent[v] = above
            above = v
        if sep:
            for c in self.pk.components(mask & ~sep):
                self.build(c, parent, above)


def _raise_recursion_limit(n: int) -> None:
    want = 4 * n + 1000
    if sys.getrecursionlimit() < want:
        sys.setrecursionlimit(want)


def treedepth(g: Graph, cfg: SolveConfig | None = None) -> TreedepthResult:
    """Exact treedepth with an optimal decomposition and search statistics."""
    cfg = cfg or SolveConfig()
    _raise_recursion_limit(g.n)
    search = _Search(g, cfg)
    parent: list[int | None] = [None] * g.n
    td = 0
    for comp in g.packed.components(g.all):
        td = max(td, search.solve_connected(comp))
        search.build(comp, parent, None)
    return TreedepthResult(td, TreedepthDecomposition(tuple(parent)), search.stats)


def _require_connected_noncomplete(g: Graph) -> None:
    if g.n == 0 or len(g.packed.components(g.all)) != 1:
        raise DomainError("top separators are defined for connected graphs")
    if is_clique(g, g.all):
        raise DomainError("a complete graph has no minimal separator")


def separator_heights(g: Graph, cfg: SolveConfig | None = None) -> tuple[int, dict[int, int]]:
    """td(G) and, for every minimal separator S, |S| + max_C td(C)."""
    _require_connected_noncomplete(g)
    _raise_recursion_limit(g.n)
    search = _Search(g, cfg or SolveConfig(pruning="none"))
    td = search.solve_connected(g.all)
    heights = {}
    for sep in close_separators(g, g.all).kept:
        heights[sep] = sep.bit_count() + search.solve(g.all & ~sep)
    return td, heights


def optimal_top_separators(g: Graph) -> SeparatorSet:
    """Minimal separators S achieving td(G) = |S| + max_C td(G[C])."""
    td, heights = separator_heights(g)
    return SeparatorSet.from_masks(s for s, h in heights.items() if h == td)


def top_separator(t: TreedepthDecomposition) -> VertexSet:
    """Root-to-first-branching vertices of a tree; all vertices for a path."""
    depth = _depths(t.parent)
    if depth is None:
        raise DomainError("parent array contains a cycle")
    roots = t.roots()
    if len(roots) != 1:
        raise DomainError(f"top separator needs a single tree, got {len(roots)} roots")
    kids = t.children()
    branching = [v for v in range(t.n) if len(kids[v]) >= 2]
    if not branching:
        return VertexSet(range(t.n))
    cut = min(depth[v] for v in branching)
    return VertexSet(v for v in range(t.n) if depth[v] <= cut)


def verify_treedepth_decomposition(g: Graph, t: TreedepthDecomposition) -> tuple[bool, int]:
    """(valid, recomputed height); structural problems are reported, not raised."""
    parent = t.parent
    if len(parent) != g.n:
        return False, 0
    for p in parent:
        if p is not None and not (isinstance(p, int) and 0 <= p < g.n):
            return False, 0
    depth = _depths(parent)
    if depth is None:
        return False, 0
    anc = [0] * g.n
    for v in sorted(range(g.n), key=depth.__getitem__):
        p = parent[v]
        if p is not None:
            anc[v] = anc[p] | 1 << p
    height = max(depth, default=0)
    for u, v in g.edges():
        if not (anc[v] >> u & 1 or anc[u] >> v & 1):
            return False, height
    return True, height
