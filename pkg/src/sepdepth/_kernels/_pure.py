"""Pure-Python kernels over integer bitsets.

Same interface as the compiled ``_ckernels`` module; selected automatically
when the extension is missing or ``SEPDEPTH_PURE_PYTHON=1`` is set.
"""
from __future__ import annotations

from typing import Sequence

BACKEND = "python"


class PackedGraph:
    """Adjacency bitmasks plus the set operations the solver hammers on."""

    __slots__ = ("adj", "n")

    def __init__(self, adj: Sequence[int]):
        self.adj = list(adj)
        self.n = len(self.adj)

    def neighborhood(self, mask: int) -> int:
        adj = self.adj
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= adj[low.bit_length() - 1]
            m ^= low
        return out & ~mask

    def components(self, mask: int) -> list[int]:
        """Connected components of G[mask], ordered by smallest member."""
        adj = self.adj
        rest = mask
        out = []
        while rest:
            comp = frontier = rest & -rest
            rest ^= comp
            while frontier:
                nxt = 0
                while frontier:
                    low = frontier & -frontier
                    nxt |= adj[low.bit_length() - 1]
                    frontier ^= low
                nxt &= rest
                rest ^= nxt
                comp |= nxt
                frontier = nxt
            out.append(comp)
        return out


def treedepth_subsets(adj: Sequence[int], n: int) -> int:
    """Treedepth by the vertex-removal recurrence over all 2^n subsets."""
    if n == 0:
        return 0
    full = (1 << n) - 1
    td = bytearray(1 << n)
    for mask in range(1, full + 1):
        low = mask & -mask
        comp = frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        if comp != mask:
            a, b = td[comp], td[mask ^ comp]
            td[mask] = a if a > b else b
            continue
        best = 255
        m = mask
        while m:
            b = m & -m
            t = td[mask ^ b]
            if t < best:
                best = t
            m ^= b
        td[mask] = best + 1
    return td[full]


def _reach_out(adj, inside: int, v: int) -> int:
    """|N(C)| where C is the component of G[inside | v] holding v."""
    comp = frontier = 1 << v
    inside |= comp
    seen = 0
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        seen |= nxt
        nxt &= inside & ~comp
        comp |= nxt
        frontier = nxt
    return (seen & ~inside).bit_count()


def treewidth_subsets(adj: Sequence[int], n: int, upper: int | None = None) -> tuple[int, list[int]]:
    """Exact treewidth and an optimal elimination order.

    Forward subset DP: state S (vertices eliminated so far) carries the best
    width reachable; ``upper`` (a known achievable width) prunes states.
    The choice per state is the smallest last-eliminated vertex, which makes
    the order identical to the compiled full-table DP.
    """
    if n == 0:
        return -1, []
    if upper is None:
        upper = n - 1
    limit = upper + 1
    full = (1 << n) - 1
    width = {0: -1}
    layer = [0]
    for _ in range(n):
        nxt: dict[int, int] = {}
        for s in layer:
            t = width[s]
            rest = full & ~s
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                q = _reach_out(adj, s, v)
                val = t if t > q else q
                if val >= limit:
                    continue
                key = s | low
                old = nxt.get(key)
                if old is None or val < old:
                    nxt[key] = val
        width.update(nxt)
        layer = sorted(nxt)
    best = width[full]
    order = []
    s = full
    while s:
        target = width[s]
        m = s
        while m:
            low = m & -m
            v = low.bit_length() - 1
            prev = width.get(s ^ low)
            if prev is not None and max(prev, _reach_out(adj, s ^ low, v)) == target:
                break
            m ^= low
        order.append(v)
        s ^= low
    order.reverse()
    return best, order
