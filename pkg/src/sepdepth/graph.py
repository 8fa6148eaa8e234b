"""Graphs over 0-based integer vertices, stored as adjacency bitmasks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import budgets
from ._kernels import PackedGraph
from .errors import InputError


def iter_bits(mask: int) -> Iterator[int]:
    """Members of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class VertexSet:
    """Immutable vertex subset; equal members hash and compare equal.

    Ordering is by (size, sorted members), the canonical order used for
    separator listings and solver iteration.
    """

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] | int = ()):
        if isinstance(members, int):
            if members < 0:
                raise InputError("negative vertex-set mask")
            mask = members
        else:
            mask = 0
            for v in members:
                if not isinstance(v, int) or v < 0:
                    raise InputError(f"invalid vertex id {v!r}")
                mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, set):
            return self.mask == mask_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.mask))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self), tuple(self)

    def __lt__(self, other: "VertexSet") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "VertexSet") -> bool:
        return self.sort_key() <= other.sort_key()

    def __or__(self, other) -> "VertexSet":
        return VertexSet(self.mask | as_mask(other))

    def __and__(self, other) -> "VertexSet":
        return VertexSet(self.mask & as_mask(other))

    def __sub__(self, other) -> "VertexSet":
        return VertexSet(self.mask & ~as_mask(other))

    def issubset(self, other) -> bool:
        return self.mask & ~as_mask(other) == 0

    def max(self) -> int:
        return self.mask.bit_length() - 1

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


def as_mask(s) -> int:
    """Accept a VertexSet, a raw mask or an iterable of vertex ids."""
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return VertexSet(s).mask


class Graph:
    """Simple undirected graph; immutable once built.

    ``adj[v]`` is the neighbor bitmask of ``v``. Use :func:`from_edges` to
    build one from an edge list.
    """

    __slots__ = ("n", "adj", "_packed")

    def __init__(self, n: int, adj: Iterable[int]):
        self.n = n
        self.adj = tuple(adj)
        self._packed = None

    @property
    def all(self) -> int:
        return (1 << self.n) - 1

    @property
    def packed(self) -> PackedGraph:
        if self._packed is None:
            self._packed = PackedGraph(self.adj)
        return self._packed

    def vertices(self) -> VertexSet:
        return VertexSet(self.all)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def check_mask(self, mask: int) -> int:
        if mask >> self.n:
            raise InputError(f"vertex set {VertexSet(mask)!r} not within 0..{self.n - 1}")
        return mask

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def is_symmetric(self) -> bool:
        for u in range(self.n):
            if self.adj[u] >> u & 1 or self.adj[u] >> self.n:
                return False
            for v in iter_bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    return False
        return True


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph; duplicate edges collapse, self-loops are rejected."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"vertex count must be a non-negative integer, got {n!r}")
    budgets.check("vertex_set", n, "graph")
    adj = [0] * n
    for e in edges:
        try:
            u, v = e
        except (TypeError, ValueError):
            raise InputError(f"edge {e!r} is not a pair") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


@dataclass(frozen=True)
class SubgraphView:
    """Induced subgraph with the relabelling back to the parent graph.

    ``kept[i]`` is the parent vertex that became vertex ``i`` in ``graph``.
    """

    parent: Graph
    kept: VertexSet
    graph: Graph
    order: tuple[int, ...]

    def to_parent(self, i: int) -> int:
        return self.order[i]

    def to_local(self, v: int) -> int:
        return self.order.index(v)


def induced_subgraph(g: Graph, s) -> SubgraphView:
    mask = g.check_mask(as_mask(s))
    order = tuple(iter_bits(mask))
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        a = 0
        for u in iter_bits(g.adj[v] & mask):
            a |= 1 << index[u]
        adj.append(a)
    return SubgraphView(g, VertexSet(mask), Graph(len(order), adj), order)


def connected_components(g: Graph, s=None) -> list[VertexSet]:
    """Components of G (or of G[s]), ordered by smallest member."""
    mask = g.all if s is None else g.check_mask(as_mask(s))
    return [VertexSet(c) for c in g.packed.components(mask)]


def open_neighborhood(g: Graph, s) -> VertexSet:
    return VertexSet(g.packed.neighborhood(g.check_mask(as_mask(s))))


def is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if (mask & ~g.adj[v]) != 1 << v:
            return False
    return True


def is_complete(g: Graph) -> bool:
    return is_clique(g, g.all)


def complement(g: Graph) -> Graph:
    full = g.all
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h.adj)
        offset += h.n
    return Graph(offset, adj)
