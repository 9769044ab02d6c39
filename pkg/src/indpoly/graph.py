"""Simple undirected graphs stored as per-vertex neighbourhood bitsets.

Vertex sets are plain Python ints used as bitsets: bit ``v`` is set iff
vertex ``v`` is in the set. Python ints are arbitrary width, so the same
code path serves every ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when a graph6 string or edge-list text cannot be parsed."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable labelled simple graph.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitset. ``labels`` is
    optional display metadata and takes no part in equality.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length must equal n")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((mask & ~(1 << v)) & ~self.adj[v] == 0 for v in bits(mask))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def with_labels(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.adj, tuple(labels))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)), g.labels)


def induced(g: Graph, keep: int) -> Graph:
    """Induced subgraph on ``keep``, relabelled in ascending original index."""
    keep &= g.vertex_mask
    old = list(bits(keep))
    index = {v: i for i, v in enumerate(old)}
    adj = tuple(mask_of(index[u] for u in bits(g.adj[v] & keep)) for v in old)
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return Graph(len(old), adj, labels)


def delete(g: Graph, remove: int) -> Graph:
    """``G - W`` for a vertex bitset ``W``."""
    return induced(g, g.vertex_mask & ~remove)


def closed_neighborhood(g: Graph, w: int) -> int:
    out = w
    for v in bits(w):
        out |= g.adj[v]
    return out


def open_neighborhood(g: Graph, w: int) -> int:
    return closed_neighborhood(g, w) & ~w


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(nb << shift for nb in h.adj)
    if g.labels is None and h.labels is None:
        labels = None
    else:
        labels = tuple(g.label(v) for v in range(g.n)) + tuple(h.label(v) for v in range(h.n))
    return Graph(g.n + h.n, adj, labels)


def component_of(adj: Sequence[int], start: int, within: int) -> int:
    """Connected component of ``start`` in the subgraph induced on ``within``."""
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as bitsets, ordered by least vertex."""
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g.adj, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    # K_0 is not a tree: it has zero components
    return len(components(g)) == 1 and g.num_edges() == g.n - 1


def is_forest(g: Graph, within: int | None = None) -> bool:
    mask = g.vertex_mask if within is None else within
    m = sum(popcount(g.adj[v] & mask) for v in bits(mask)) // 2
    return m == popcount(mask) - len(components(g, mask))


# -- text formats -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair per line."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise GraphFormatError("edge list is empty; expected a vertex count")
    try:
        n = int(rows[0])
    except ValueError:
        raise GraphFormatError(f"bad vertex count line {rows[0]!r}") from None
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"bad edge line {line!r}") from None
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _upper_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: column-major over the upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    if g.n >= 63:
        raise ValueError("graph6 encoding is only supported for n < 63")
    out = [chr(63 + g.n)]
    acc = nbits = 0
    for i, j in _upper_pairs(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"non-graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated long-form graph6 header")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated long-form graph6 header")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    payload = vals[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(payload) < need:
        raise GraphFormatError(f"truncated graph6 payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphFormatError(f"trailing data after graph6 payload ({len(payload) - need} extra bytes)")
    adj = [0] * n
    k = 0
    for i, j in _upper_pairs(n):
        if payload[k // 6] >> (5 - k % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    return Graph(n, tuple(adj))
