"""Chordality, clique complexes, leaf orders, and small brute-force invariants."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .engine import GuardExceeded, independence_polynomial
from .graph import Graph, bits, complement, components, is_connected, is_forest, popcount
from .poly import b_sequence

CLIQUE_LIMIT = 30
CUT_LIMIT = 16


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting)."""
    if g.n > CLIQUE_LIMIT:
        raise GuardExceeded(f"maximal_cliques needs n <= {CLIQUE_LIMIT}, got {g.n}")
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(p & adj[u]))
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.vertex_mask, 0)
    out.sort(key=lambda c: ((c & -c).bit_length(), popcount(c), c))
    return out


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the lowest index)."""
    weight = [0] * g.n
    unvisited = g.vertex_mask
    order = []
    while unvisited:
        v = max(bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in bits(g.adj[v] & unvisited):
            weight[u] += 1
    return order


def is_perfect_elimination_order(g: Graph, order: Sequence[int]) -> bool:
    later = g.vertex_mask
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    # the reverse of an MCS order is a PEO iff the graph is chordal
    return is_perfect_elimination_order(g, mcs_order(g)[::-1])


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


# -- leaf orders ------------------------------------------------------------

@dataclass(frozen=True)
class LeafOrder:
    facets: tuple[int, ...]
    order: tuple[int, ...]


def find_branch(facet: int, others: Sequence[int]) -> int | None:
    """A branch of ``facet`` among ``others``, or None if it is not a leaf.

    Returns -1 when ``others`` is empty (the facet is the only one).
    """
    if not others:
        return -1
    for k, b in enumerate(others):
        meet = facet & b
        if all(facet & h & ~meet == 0 for j, h in enumerate(others) if j != k):
            return k
    return None


def _check_incomparable(facets: Sequence[int]) -> None:
    for a, b in combinations(facets, 2):
        if a & b == a or a & b == b:
            raise ValueError("facets must be pairwise inclusion-incomparable")


def is_leaf_order(facets: Sequence[int], order: Sequence[int]) -> bool:
    if sorted(order) != list(range(len(facets))):
        return False
    for i in range(len(order)):
        prefix = [facets[j] for j in order[:i]]
        if find_branch(facets[order[i]], prefix) is None:
            return False
    return True


def leaf_order(facets: Sequence[int]) -> LeafOrder | None:
    """Leaf order of the complex with these facets, if it is a quasi-forest.

    Facets are peeled greedily from the back: any leaf of the current
    complex may be removed last.
    """
    facets = tuple(facets)
    _check_incomparable(facets)
    remaining = list(range(len(facets)))
    peeled = []
    while remaining:
        for pos, idx in enumerate(remaining):
            rest = [facets[j] for j in remaining if j != idx]
            if find_branch(facets[idx], rest) is not None:
                peeled.append(idx)
                del remaining[pos]
                break
        else:
            return None
    return LeafOrder(facets, tuple(reversed(peeled)))


# -- invariants used by the cochordal / small-alpha checks ------------------

def b_sequence_of_cochordal(g: Graph) -> tuple[int, ...]:
    if not is_cochordal(g):
        raise ValueError("graph is not cochordal")
    b = b_sequence(independence_polynomial(g))
    if any(x <= 0 for x in b):
        raise AssertionError(f"non-positive b-sequence entry in {b}")
    return b


def complement_component_count(g: Graph) -> int:
    return len(components(complement(g)))


def vertex_connectivity(g: Graph) -> int:
    """Smallest vertex cut size; ``n - 1`` for complete graphs, 0 if disconnected."""
    if g.n > CUT_LIMIT:
        raise GuardExceeded(f"vertex_connectivity needs n <= {CUT_LIMIT}, got {g.n}")
    if not is_connected(g):
        return 0
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            mask = sum(1 << v for v in cut)
            if len(components(g, g.vertex_mask & ~mask)) > 1:
                return k
    return max(g.n - 1, 0)


def decycling_number(g: Graph) -> int:
    """Fewest vertices whose removal leaves a forest."""
    if g.n > CUT_LIMIT:
        raise GuardExceeded(f"decycling_number needs n <= {CUT_LIMIT}, got {g.n}")
    full = g.vertex_mask
    for k in range(g.n + 1):
        for cut in combinations(range(g.n), k):
            mask = sum(1 << v for v in cut)
            if is_forest(g, full & ~mask):
                return k
    raise AssertionError("unreachable: removing every vertex leaves a forest")

