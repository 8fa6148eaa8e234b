"""PACE 2020 treedepth text formats.

``.gr``: a ``p tdp <n> <m>`` header then one ``<u> <v>`` line per edge
(1-based); lines starting with ``c`` are comments.

``.tree``: the depth on the first line, then line i holds the 1-based
parent of vertex i, or 0 for a root.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph, from_edges
from .solver import TreedepthDecomposition, _depths

log = logging.getLogger(__name__)


@dataclass
class GrDocument:
    n: int
    m: int
    edges: list[tuple[int, int]]  # 1-based, as on the wire
    comments: list[str] = field(default_factory=list)

    def to_graph(self) -> Graph:
        return from_edges(self.n, [(u - 1, v - 1) for u, v in self.edges])

    @classmethod
    def from_graph(cls, g: Graph, comments=()) -> "GrDocument":
        edges = [(u + 1, v + 1) for u, v in g.edges()]
        return cls(g.n, len(edges), edges, list(comments))


def _lines(text: str):
    for no, raw in enumerate(text.replace("\r\n", "\n").replace("\r", "\n").split("\n"), 1):
        yield no, raw.strip()


def _int(token: str, no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected an integer, got {token!r}", no) from None


def parse_gr(text: str) -> GrDocument:
    """Parse a ``.gr`` document; duplicate edges are dropped with a warning."""
    header = None
    comments = []
    raw_edges = []
    last = 0
    for no, line in _lines(text):
        if not line:
            continue
        last = no
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p":
                raise InputError("missing 'p tdp <n> <m>' header", no)
            if len(parts) != 4 or parts[1] != "tdp":
                raise InputError(f"malformed header {line!r}", no)
            n, m = _int(parts[2], no), _int(parts[3], no)
            if n < 0 or m < 0:
                raise InputError("negative vertex or edge count", no)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise InputError(f"expected two endpoints, got {len(parts)} tokens", no)
        u, v = _int(parts[0], no), _int(parts[1], no)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"endpoint out of range 1..{n}", no)
        if u == v:
            raise InputError(f"self-loop at vertex {u}", no)
        raw_edges.append((min(u, v), max(u, v)))
    if header is None:
        raise InputError("missing 'p tdp <n> <m>' header", last or 1)
    n, m = header
    if len(raw_edges) != m:
        raise InputError(f"header declares {m} edges but {len(raw_edges)} were given", last or 1)
    edges = sorted(set(raw_edges))
    if len(edges) != len(raw_edges):
        log.warning("dropped %d duplicate edge(s)", len(raw_edges) - len(edges))
    return GrDocument(n, len(edges), edges, comments)


def write_gr(doc: GrDocument) -> str:
    edges = sorted({(min(u, v), max(u, v)) for u, v in doc.edges})
    out = [f"c {c}" if c else "c" for c in doc.comments]
    out.append(f"p tdp {doc.n} {len(edges)}")
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def graph_to_gr(g: Graph, comments=()) -> str:
    return write_gr(GrDocument.from_graph(g, comments))


def read_graph(text: str) -> Graph:
    return parse_gr(text).to_graph()


@dataclass
class TreeDocument:
    depth: int
    parents: list[int]  # 1-based, 0 for roots

    def to_decomposition(self) -> TreedepthDecomposition:
        return TreedepthDecomposition(tuple(p - 1 if p else None for p in self.parents))


def write_tree(t: TreedepthDecomposition) -> str:
    lines = [str(t.height)] + [str(p + 1) if p is not None else "0" for p in t.parent]
    return "\n".join(lines) + "\n"


def parse_tree(text: str, n: int) -> TreeDocument:
    values = []
    for no, line in _lines(text):
        if not line:
            continue
        parts = line.split()
        if len(parts) != 1:
            raise InputError(f"expected one integer, got {len(parts)} tokens", no)
        values.append((no, _int(parts[0], no)))
    if not values:
        raise InputError("empty tree document", 1)
    (_, depth), rows = values[0], values[1:]
    if len(rows) != n:
        raise InputError(f"expected {n} parent lines, got {len(rows)}", rows[-1][0] if rows else values[0][0])
    parents = []
    for no, p in rows:
        if not 0 <= p <= n:
            raise InputError(f"parent {p} out of range 0..{n}", no)
        parents.append(p)
    if _depths([p - 1 if p else None for p in parents]) is None:
        raise InputError("parent array is not a forest (cycle)", rows[0][0])
    return TreeDocument(depth, parents)
