"""Closed-form invariants for the constructible families.

Everything here is computed from family parameters alone. The only place a
graph computation is needed is the whisker family, whose formulas are
stated in terms of the base graph; those route through
:func:`~indpoly.engine.eval_minus_one`, the branch-and-bound independence
number, or plain subset enumeration of the base, never through the
polynomial engine itself.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod

from .engine import eval_minus_one, independence_number_bnb
from .families import BigStarParams, BouquetParams, CaterpillarSpec, TwoCliqueParams, WhiskerSpec
from .graph import Graph, bits, closed_neighborhood, delete
from .poly import IntPolynomial, exact_divide, is_symmetric

_PATH_MINUS_ONE = (1, 0, -1, -1, 0, 1)

# whisker formulas enumerate every subset of the base graph
WHISKER_BASE_LIMIT = 25


def path_minus_one(n: int) -> int:
    """``P_{P_n}(-1)``; period 6 starting 1, 0, -1, -1, 0, 1."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    return _PATH_MINUS_ONE[n % 6]


def path_polynomial(n: int) -> IntPolynomial:
    """Independence polynomial of ``P_n`` via ``P_n = P_{n-1} + x P_{n-2}``."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    prev, cur = IntPolynomial([1]), IntPolynomial([1])  # P_{-1} := 1 makes P_1 = 1 + x
    for _ in range(n):
        prev, cur = cur, cur + prev.shift(1)
    return cur


# -- big stars --------------------------------------------------------------

def _mod6_counts(p: BigStarParams) -> Counter:
    return Counter(a % 6 for a in p.arms)


def big_star_poly_formula(p: BigStarParams) -> IntPolynomial:
    away = prod((path_polynomial(a) for a in p.arms), start=IntPolynomial([1]))
    with_centre = prod((path_polynomial(a - 1) for a in p.arms), start=IntPolynomial([1]))
    return away + with_centre.shift(1)


def big_star_minus_one_products(p: BigStarParams) -> int:
    """Difference of the two path-value products."""
    return prod(path_minus_one(a) for a in p.arms) - prod(path_minus_one(a - 1) for a in p.arms)


def big_star_minus_one(p: BigStarParams) -> int:
    c = _mod6_counts(p)
    if c[1] == c[4] == 0 and c[2] + c[5] > 0:
        return (-1) ** (c[2] + c[3])
    if c[2] == c[5] == 0 and c[1] + c[4] > 0:
        return (-1) ** (c[3] + c[4] + 1)
    return 0


def big_star_is_zero(p: BigStarParams) -> bool:
    """Vanishing at -1 from residues mod 3 only."""
    res = {a % 3 for a in p.arms}
    return res == {0} or {1, 2} <= res


def big_star_sign(p: BigStarParams) -> int:
    """The +1 / -1 / 0 classification stated with mod-3 gates and parity."""
    res = [a % 3 for a in p.arms]
    c = _mod6_counts(p)
    if 1 not in res and 2 in res:
        return 1 if (c[2] + c[3]) % 2 == 0 else -1
    if 2 not in res and 1 in res:
        return 1 if (c[3] + c[4]) % 2 == 1 else -1
    return 0


def big_star_alpha(p: BigStarParams) -> int:
    odd = sum(a % 2 for a in p.arms)
    return sum(a // 2 for a in p.arms) + max(1, odd)


def big_star_pseudo_gorenstein(p: BigStarParams) -> bool:
    res = [a % 3 for a in p.arms]
    c = _mod6_counts(p)
    alpha = big_star_alpha(p)
    if 1 not in res and 2 in res:
        return alpha % 2 == (c[2] + c[3]) % 2
    if 2 not in res and 1 in res:
        return alpha % 2 == (c[3] + c[4] + 1) % 2
    return False


def big_star_is_symmetric(p: BigStarParams) -> bool:
    return sorted(p.arms) == [1, 1, 5]


# -- whiskering -------------------------------------------------------------

def _independent_subsets(h: Graph):
    if h.n > WHISKER_BASE_LIMIT:
        raise ValueError(f"base graph too large to enumerate (n = {h.n} > {WHISKER_BASE_LIMIT})")
    for s in range(1 << h.n):
        if h.is_independent(s):
            yield s


def whisker_polynomial(spec: WhiskerSpec) -> IntPolynomial:
    f = spec.leaf_counts
    total = sum(f)
    out = IntPolynomial()
    # group summands by the exponent of (1 + x) and |S|
    terms: Counter = Counter()
    for s in _independent_subsets(spec.base):
        size = s.bit_count()
        exponent = total - sum(f[i] for i in bits(s))
        terms[(size, exponent)] += 1
    for (size, exponent), mult in sorted(terms.items()):
        out = out + (IntPolynomial.one_plus_x_pow(exponent) * mult).shift(size)
    return out


def leaf_support(spec: WhiskerSpec) -> int:
    return sum(1 << i for i, f in enumerate(spec.leaf_counts) if f > 0)


def whisker_minus_one(spec: WhiskerSpec) -> int:
    h = spec.base
    c = leaf_support(spec)
    if not h.is_independent(c):
        return 0
    sign = -1 if c.bit_count() % 2 else 1
    return sign * eval_minus_one(delete(h, closed_neighborhood(h, c)))


def whisker_alpha(spec: WhiskerSpec) -> int:
    return sum(spec.leaf_counts) + independence_number_bnb(delete(spec.base, leaf_support(spec)))


def two_whisker_polynomial(h: Graph) -> IntPolynomial:
    """``sum over independent S of x^|S| (1+x)^(2(n-|S|))`` for the base ``h``."""
    return whisker_polynomial(WhiskerSpec(h, (2,) * h.n))


def whisker_symmetric_criterion(spec: WhiskerSpec) -> bool:
    if any(f == 0 for f in spec.leaf_counts):
        raise ValueError("criterion requires at least one leaf on every base vertex")
    verdict = all(f == 2 for f in spec.leaf_counts)
    if verdict and not is_symmetric(two_whisker_polynomial(spec.base)):
        raise AssertionError("two-whisker polynomial is not palindromic")
    return verdict


# -- caterpillars -----------------------------------------------------------

@dataclass(frozen=True)
class CaterpillarGaps:
    r: int
    b: tuple[int, ...]
    m: tuple[int, ...]
    ell: tuple[int, ...]
    lam: int
    has_consecutive: bool


def caterpillar_gaps(spec: CaterpillarSpec) -> CaterpillarGaps:
    n = spec.spine
    b = tuple(i + 1 for i, f in enumerate(spec.leaf_counts) if f > 0)
    r = len(b)
    if r == 0:
        m = ell = (n,)
    else:
        m = (b[0] - 1,) + tuple(b[j + 1] - b[j] - 1 for j in range(r - 1)) + (n - b[-1],)
        ell = (max(m[0] - 1, 0),) + tuple(max(x - 2, 0) for x in m[1:-1]) + (max(m[-1] - 1, 0),)
    lam = sum(1 for x in ell if x % 6 in (2, 3))
    consecutive = any(b[j + 1] == b[j] + 1 for j in range(r - 1))
    return CaterpillarGaps(r=r, b=b, m=m, ell=ell, lam=lam, has_consecutive=consecutive)


def caterpillar_minus_one(spec: CaterpillarSpec) -> int:
    gaps = caterpillar_gaps(spec)
    if gaps.has_consecutive:
        return 0
    return (-1) ** gaps.r * prod(path_minus_one(x) for x in gaps.ell)


def caterpillar_is_zero(spec: CaterpillarSpec) -> bool:
    gaps = caterpillar_gaps(spec)
    return gaps.has_consecutive or any(x % 3 == 1 for x in gaps.ell)


def caterpillar_sign(spec: CaterpillarSpec) -> int:
    """``(-1)^(r + lambda)``, meaningful only where the value is nonzero."""
    gaps = caterpillar_gaps(spec)
    return (-1) ** (gaps.r + gaps.lam)


def caterpillar_alpha(spec: CaterpillarSpec) -> int:
    gaps = caterpillar_gaps(spec)
    return sum(spec.leaf_counts) + sum((x + 1) // 2 for x in gaps.m)


def caterpillar_pseudo_gorenstein(spec: CaterpillarSpec) -> bool:
    gaps = caterpillar_gaps(spec)
    if gaps.has_consecutive or any(x % 3 == 1 for x in gaps.ell):
        return False
    return caterpillar_alpha(spec) % 2 == (gaps.r + gaps.lam) % 2


def caterpillar_symmetric_criterion(spec: CaterpillarSpec) -> bool:
    if any(f == 0 for f in spec.leaf_counts):
        raise ValueError("criterion requires a leg on every spine vertex")
    return all(f == 2 for f in spec.leaf_counts)


# -- alpha <= 2 and chordal extremes ----------------------------------------

def two_clique_polynomial(p: TwoCliqueParams) -> IntPolynomial:
    return IntPolynomial([1, p.n, p.a * (p.n - p.a) - p.t])


def two_clique_minus_one(p: TwoCliqueParams) -> int:
    return (p.a - 1) * (p.n - p.a - 1) - p.t


def alpha2_value_range(n: int) -> tuple[int, int]:
    """Closed interval of ``P_G(-1)`` over connected ``G`` on ``n`` vertices with alpha <= 2."""
    if n < 3:
        raise ValueError("need n >= 3")
    return -(n - 1), (n - 2) ** 2 // 4 - 1


def realize_value(n: int, v: int) -> TwoCliqueParams:
    lo, hi = alpha2_value_range(n)
    if not lo <= v <= hi:
        raise ValueError(f"{v} is outside [{lo}, {hi}]")
    for a in range(1, n // 2 + 1):
        t = (a - 1) * (n - a - 1) - v
        if 1 <= t <= n - a:
            return TwoCliqueParams(n, a, t)
    raise AssertionError(f"no two-clique graph realises {v} on {n} vertices")


def bouquet_polynomial(p: BouquetParams) -> IntPolynomial:
    return prod((IntPolynomial([1, r]) for r in p.radii), start=IntPolynomial([1])) + IntPolynomial([0, 1])


def bouquet_minus_one(p: BouquetParams) -> int:
    return prod(1 - r for r in p.radii) - 1


def exponential_lower_bound(n: int) -> int:
    return 4 ** ((n - 1) // 5) - 1


# -- cochordal --------------------------------------------------------------

def cochordal_symmetric_polynomial(d: int, m: int) -> IntPolynomial:
    return IntPolynomial.one_plus_x_pow(d) + (IntPolynomial.one_plus_x_pow(d - 2) * m).shift(1)


def cochordal_symmetric_form(p: IntPolynomial) -> int | None:
    """``m >= 0`` with ``p == (1+x)^d + m x (1+x)^(d-2)``, or None."""
    d = p.degree
    if d < 2:
        raise ValueError("need degree at least 2")
    rest = p - IntPolynomial.one_plus_x_pow(d)
    q = exact_divide(rest, IntPolynomial.one_plus_x_pow(d - 2).shift(1))
    if q is None or len(q) > 1:
        return None
    m = q[0]
    return m if m >= 0 else None

