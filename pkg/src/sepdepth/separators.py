"""Full components, minimal-separator tests and enumeration."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import budgets
from .graph import Graph, VertexSet, as_mask, iter_bits


def sep_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: size, then lexicographic members."""
    return mask.bit_count(), tuple(iter_bits(mask))


@dataclass(frozen=True)
class SeparatorSet:
    """Deduplicated minimal separators in canonical order."""

    separators: tuple[VertexSet, ...]
    bound: int | None = None

    def __len__(self) -> int:
        return len(self.separators)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.separators)

    def __contains__(self, s) -> bool:
        return VertexSet(as_mask(s)) in set(self.separators)

    def as_set(self) -> set[VertexSet]:
        return set(self.separators)

    def max_size(self) -> int:
        return max((len(s) for s in self.separators), default=0)

    @classmethod
    def from_masks(cls, masks, bound=None) -> "SeparatorSet":
        ordered = sorted(set(masks), key=sep_key)
        return cls(tuple(VertexSet(m) for m in ordered), bound)


@dataclass
class EnumStats:
    generated: int = 0  # distinct separators produced (kept + discarded)
    discarded: int = 0  # produced but over the bound, never expanded
    kept: list[int] = field(default_factory=list)


def _full_components(g: Graph, within: int, s: int) -> list[int]:
    pk = g.packed
    return [c for c in pk.components(within & ~s) if pk.neighborhood(c) & within == s]


def full_components(g: Graph, s) -> list[VertexSet]:
    """Components C of G - S whose open neighborhood is exactly S."""
    mask = g.check_mask(as_mask(s))
    return [VertexSet(c) for c in _full_components(g, g.all, mask)]


def is_minimal_separator(g: Graph, s) -> bool:
    mask = g.check_mask(as_mask(s))
    return len(_full_components(g, g.all, mask)) >= 2


def close_separators(g: Graph, within: int, max_size: int | None = None, aggressive: bool = False) -> EnumStats:
    """Minimal separators of G[within] by neighborhood closure.

    Seeds are the neighborhoods of the components of G - N[v]; each found S
    is expanded through the components of G - (S + N(x)) for x in S. With
    ``aggressive`` and a ``max_size``, separators over the bound are dropped
    before expansion; otherwise the bound only filters the output.
    """
    pk = g.packed
    adj = g.adj
    seen: set[int] = set()
    queue: list[int] = []
    stats = EnumStats()
    prune = aggressive and max_size is not None

    def add(sep: int) -> None:
        if not sep or sep in seen:
            return
        seen.add(sep)
        stats.generated += 1
        if prune and sep.bit_count() > max_size:
            stats.discarded += 1
            return
        queue.append(sep)

    parts = pk.components(within)
    if len(parts) > 1:
        # every minimal separator of a disconnected graph lies inside one component
        for c in parts:
            sub = close_separators(g, c, max_size, aggressive)
            stats.generated += sub.generated
            stats.discarded += sub.discarded
            stats.kept.extend(sub.kept)
        stats.kept.sort(key=sep_key)
        return stats

    for v in iter_bits(within):
        closed = (adj[v] & within) | (1 << v)
        for c in pk.components(within & ~closed):
            add(pk.neighborhood(c) & within)
    kept = []
    while queue:
        sep = queue.pop()
        kept.append(sep)
        for x in iter_bits(sep):
            for c in pk.components(within & ~(sep | adj[x])):
                add(pk.neighborhood(c) & within)
    if max_size is not None:
        kept = [s for s in kept if s.bit_count() <= max_size]
    kept.sort(key=sep_key)
    stats.kept = kept
    return stats


def enumerate_minimal_separators(g: Graph, max_size: int | None = None, aggressive: bool = False) -> SeparatorSet:
    """All minimal separators of G, or those with at most ``max_size`` vertices.

    Disconnected graphs are handled per component; the empty set is never
    listed.
    """
    stats = close_separators(g, g.all, max_size, aggressive)
    return SeparatorSet.from_masks(stats.kept, max_size)


def minimal_separators_bruteforce(g: Graph) -> SeparatorSet:
    """Filter every vertex subset through the full-component test.

    Unlike the enumeration, the empty set is reported for disconnected graphs.
    """
    budgets.check("oracle_sep", g.n, "minimal_separators_bruteforce")
    pk = g.packed
    full = g.all
    found = []
    for s in range(full + 1):
        nfull = 0
        for c in pk.components(full & ~s):
            if pk.neighborhood(c) == s:
                nfull += 1
                if nfull == 2:
                    found.append(s)
                    break
    return SeparatorSet.from_masks(found)
