"""Constructors for the graph families with closed-form invariants.

Vertex numbering is fixed per family so that positions can be referenced:

* big stars and clique bouquets: the centre is vertex 0, then arm (or clique)
  vertices in order, each arm listed from the centre outwards;
* whiskered graphs and caterpillars: base (spine) vertices first, then the
  leaves of base vertex 0, of base vertex 1, and so on;
* ``two_clique``: ``u_1..u_a`` then ``v_1..v_{n-a}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, disjoint_union, empty_graph, from_edge_list


@dataclass(frozen=True)
class BigStarParams:
    arms: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) < 3:
            raise ValueError("a big star needs at least 3 arms")
        if any(a < 1 for a in self.arms):
            raise ValueError("big star arm lengths must be positive")


@dataclass(frozen=True)
class WhiskerSpec:
    base: Graph
    leaf_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.leaf_counts) != self.base.n:
            raise ValueError(f"need {self.base.n} leaf counts, got {len(self.leaf_counts)}")
        if any(f < 0 for f in self.leaf_counts):
            raise ValueError("leaf counts must be non-negative")


@dataclass(frozen=True)
class CaterpillarSpec:
    spine: int
    leaf_counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.spine < 1:
            raise ValueError("caterpillar spine needs at least one vertex")
        if len(self.leaf_counts) != self.spine:
            raise ValueError(f"need {self.spine} leaf counts, got {len(self.leaf_counts)}")
        if any(f < 0 for f in self.leaf_counts):
            raise ValueError("leaf counts must be non-negative")


@dataclass(frozen=True)
class TwoCliqueParams:
    n: int
    a: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("two_clique needs n >= 3")
        if not 1 <= self.a <= self.n // 2:
            raise ValueError(f"need 1 <= a <= {self.n // 2}")
        if not 1 <= self.t <= self.n - self.a:
            raise ValueError(f"need 1 <= t <= {self.n - self.a}")


@dataclass(frozen=True)
class BouquetParams:
    radii: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.radii:
            raise ValueError("a clique bouquet needs at least one clique")
        if any(r < 1 for r in self.radii):
            raise ValueError("bouquet radii must be positive")


def path(n: int) -> Graph:
    if n < 0:
        raise ValueError("path length must be non-negative")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_edge(n: int) -> Graph:
    """``K_n`` with the edge ``{0, 1}`` removed."""
    if n < 2:
        raise ValueError("complete_minus_edge needs n >= 2")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def big_star(p: BigStarParams) -> Graph:
    edges = []
    labels = ["x"]
    v = 1
    for i, length in enumerate(p.arms, start=1):
        prev = 0
        for k in range(1, length + 1):
            edges.append((prev, v))
            labels.append(f"x{k}^({i})")
            prev = v
            v += 1
    return from_edge_list(v, edges, labels)


def whisker(spec: WhiskerSpec) -> Graph:
    h = spec.base
    edges = list(h.edges())
    labels = [h.label(i) for i in range(h.n)]
    v = h.n
    for i, f in enumerate(spec.leaf_counts):
        for k in range(f):
            edges.append((i, v))
            labels.append(f"L{h.label(i)}.{k}")
            v += 1
    return from_edge_list(v, edges, labels)


def caterpillar(spec: CaterpillarSpec) -> Graph:
    spine = path(spec.spine).with_labels([f"x{i + 1}" for i in range(spec.spine)])
    return whisker(WhiskerSpec(spine, tuple(spec.leaf_counts)))


def two_clique(p: TwoCliqueParams) -> Graph:
    a, b = p.a, p.n - p.a
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges += [(a + i, a + j) for i in range(b) for j in range(i + 1, b)]
    edges += [(0, a + j) for j in range(p.t)]
    labels = [f"u{i + 1}" for i in range(a)] + [f"v{j + 1}" for j in range(b)]
    return from_edge_list(p.n, edges, labels)


def clique_bouquet(p: BouquetParams) -> Graph:
    edges = []
    labels = ["x"]
    v = 1
    for i, r in enumerate(p.radii, start=1):
        block = [0] + list(range(v, v + r))
        edges += [(a, b) for k, a in enumerate(block) for b in block[k + 1:]]
        labels += [f"c{i}.{k}" for k in range(r)]
        v += r
    return from_edge_list(v, edges, labels)


def cochordal_symmetric_witness(d: int, m: int) -> Graph:
    """``(d-2)K_1`` disjoint union ``K_{m+2} - e``; isolated vertices come last."""
    if d < 2:
        raise ValueError("need d >= 2")
    if m < 0:
        raise ValueError("need m >= 0")
    return disjoint_union(complete_minus_edge(m + 2), empty_graph(d - 2))


def exponential_witness_radii(n: int) -> tuple[int, ...]:
    """Clique radii of the bouquet on ``n`` vertices with large ``|P(-1)|``."""
    if n < 3:
        raise ValueError("need n >= 3")
    q, r = divmod(n - 1, 5)
    if r == 1:
        # q >= 1 here because n >= 3
        return (5,) * (q - 1) + (3, 3)
    return (5,) * q + ({0: (), 2: (2,), 3: (3,), 4: (4,)}[r])


def exponential_witness(n: int) -> Graph:
    return clique_bouquet(BouquetParams(exponential_witness_radii(n)))


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def as_tuple(values: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in values)
