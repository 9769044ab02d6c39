"""Exact independence polynomials and the invariants derived from them."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, TypeVar

import numpy as np

from .graph import Graph, bits, component_of, popcount
from .poly import HData, IntPolynomial, eval_at, h_transform, is_symmetric, multiplicity_at_minus_one

BRUTE_FORCE_LIMIT = 30
_CHUNK_BITS = 20

T = TypeVar("T")


class GuardExceeded(ValueError):
    """Input is larger than a brute-force routine is allowed to handle."""


def brute_force_limit() -> int:
    env = os.environ.get("INDPOLY_MAX_N")
    return int(env) if env else BRUTE_FORCE_LIMIT


def brute_force_polynomial(g: Graph) -> IntPolynomial:
    """Count independent sets by size by testing every vertex subset.

    This is the reference oracle: it uses nothing but the definition.
    """
    limit = brute_force_limit()
    if g.n > limit:
        raise GuardExceeded(f"brute force needs n <= {limit}, got n = {g.n}")
    counts = np.zeros(g.n + 1, dtype=np.int64)
    total = 1 << g.n
    chunk = min(total, 1 << _CHUNK_BITS)
    adj = [np.int64(a) for a in g.adj]
    for start in range(0, total, chunk):
        masks = np.arange(start, start + chunk, dtype=np.int64)
        ok = np.ones(chunk, dtype=bool)
        for v in range(g.n):
            has_v = (masks >> v) & 1 == 1
            ok &= ~(has_v & ((masks & adj[v]) != 0))
        sizes = np.bitwise_count(masks[ok])
        counts += np.bincount(sizes, minlength=g.n + 1)
    return IntPolynomial(int(c) for c in counts)


def _pivot(adj: tuple[int, ...], comp: int) -> int:
    best, best_deg = -1, -1
    for v in bits(comp):
        d = popcount(adj[v] & comp)
        if d > best_deg:
            best, best_deg = v, d
    return best


def _deletion_recursion(
    g: Graph,
    one: T,
    isolated: T,
    mul: Callable[[T, T], T],
    combine: Callable[[T, T], T],
) -> T:
    """Evaluate ``f(G) = f(G - v) (+) x * f(G - N[v])`` over induced subgraphs.

    ``combine(a, b)`` receives ``f(G-v)`` and ``f(G-N[v])``. Components are
    split and multiplied; results are memoised per surviving-vertex bitset.
    The memo lives only for this call.
    """
    adj = g.adj
    memo: dict[int, T] = {}

    def solve(mask: int) -> T:
        if not mask:
            return one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = (mask & -mask).bit_length() - 1
        comp = component_of(adj, low, mask)
        if comp != mask:
            result = mul(solve_component(comp), solve(mask & ~comp))
        else:
            result = solve_component(comp)
        memo[mask] = result
        return result

    def solve_component(comp: int) -> T:
        if comp & (comp - 1) == 0:
            return isolated
        hit = memo.get(comp)
        if hit is not None:
            return hit
        v = _pivot(adj, comp)
        result = combine(solve(comp & ~(1 << v)), solve(comp & ~(adj[v] | 1 << v)))
        memo[comp] = result
        return result

    return solve(g.vertex_mask)


_ONE = IntPolynomial([1])
_X = IntPolynomial([0, 1])


def independence_polynomial(g: Graph) -> IntPolynomial:
    return _deletion_recursion(
        g,
        one=_ONE,
        isolated=IntPolynomial([1, 1]),
        mul=lambda a, b: a * b,
        combine=lambda without, closed: without + closed.shift(1),
    )


def eval_minus_one(g: Graph) -> int:
    """``P_G(-1)`` through the same recursion, carried out on integers."""
    return _deletion_recursion(
        g,
        one=1,
        isolated=0,
        mul=lambda a, b: a * b,
        combine=lambda without, closed: without - closed,
    )


def independence_number(g: Graph) -> int:
    return independence_polynomial(g).degree


def independence_number_bnb(g: Graph) -> int:
    """Branch and bound for alpha, independent of the polynomial route."""
    adj = g.adj
    best = 0

    def grow(mask: int, size: int) -> None:
        nonlocal best
        if size + popcount(mask) <= best:
            return
        if not mask:
            best = size
            return
        # degree-0/1 vertices are always safe to take
        for v in bits(mask):
            if popcount(adj[v] & mask) <= 1:
                grow(mask & ~(adj[v] | 1 << v), size + 1)
                return
        v = _pivot(adj, mask)
        grow(mask & ~(adj[v] | 1 << v), size + 1)
        grow(mask & ~(1 << v), size)

    grow(g.vertex_mask, 0)
    return best


@dataclass(frozen=True)
class InvariantReport:
    poly: IntPolynomial
    alpha: int
    value_at_minus_one: int
    multiplicity: int
    h: HData
    pseudo_gorenstein_star: bool
    symmetric: bool


def report(g: Graph, brute_force: bool = False) -> InvariantReport:
    p = brute_force_polynomial(g) if brute_force else independence_polynomial(g)
    alpha = p.degree
    value = eval_at(p, -1)
    return InvariantReport(
        poly=p,
        alpha=alpha,
        value_at_minus_one=value,
        multiplicity=multiplicity_at_minus_one(p),
        h=h_transform(p, alpha),
        pseudo_gorenstein_star=value == (-1) ** alpha,
        symmetric=is_symmetric(p),
    )
