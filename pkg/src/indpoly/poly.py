"""Dense univariate polynomials over the integers.

Coefficients are Python ints, so there is no overflow anywhere. The zero
polynomial has an empty coefficient tuple; anything needing a degree
rejects it explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class ZeroPolynomialError(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def one_plus_x_pow(cls, k: int) -> IntPolynomial:
        return cls(comb(k, i) for i in range(k + 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(m))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _lift(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, x: int) -> int:
        return eval_at(self, x)

    def __str__(self) -> str:
        return render(self)


def _lift(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial([p])


def eval_at(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _require_nonzero(p: IntPolynomial) -> None:
    if p.is_zero():
        raise ZeroPolynomialError("operation is undefined for the zero polynomial")


def is_symmetric(p: IntPolynomial) -> bool:
    _require_nonzero(p)
    return p.coeffs == p.coeffs[::-1]


def is_unimodal(p: IntPolynomial) -> bool:
    """Non-decreasing up to some index, non-increasing after it (plateaus allowed)."""
    c = p.coeffs
    i = 1
    while i < len(c) and c[i] >= c[i - 1]:
        i += 1
    while i < len(c) and c[i] <= c[i - 1]:
        i += 1
    return i >= len(c)


def divide_by_one_plus_x(p: IntPolynomial) -> tuple[IntPolynomial, int]:
    """Synthetic division by ``x + 1``; returns ``(quotient, remainder)``."""
    c = p.coeffs
    if not c:
        return IntPolynomial(), 0
    q = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc = c[i] - acc
        q[i - 1] = acc
    return IntPolynomial(q), c[0] - acc


def multiplicity_at_minus_one(p: IntPolynomial) -> int:
    _require_nonzero(p)
    k = 0
    while True:
        q, rem = divide_by_one_plus_x(p)
        if rem:
            return k
        p, k = q, k + 1


def exact_divide(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial | None:
    """Quotient ``p / d`` if it exists in Z[x], else None."""
    _require_nonzero(d)
    rem = list(p.coeffs)
    dd = d.coeffs
    lead = dd[-1]
    if len(rem) < len(dd):
        return IntPolynomial() if not any(rem) else None
    q = [0] * (len(rem) - len(dd) + 1)
    for k in range(len(q) - 1, -1, -1):
        top = rem[k + len(dd) - 1]
        if top % lead:
            return None
        qk = top // lead
        q[k] = qk
        if qk:
            for i, b in enumerate(dd):
                rem[k + i] -= qk * b
    if any(rem):
        return None
    return IntPolynomial(q)


@dataclass(frozen=True)
class HData:
    h: IntPolynomial
    alpha: int
    a_invariant: int


def h_transform(p: IntPolynomial, alpha: int) -> HData:
    """h-polynomial ``(1-t)^alpha * p(t/(1-t))`` of an independence polynomial ``p``."""
    _require_nonzero(p)
    if alpha != p.degree:
        raise ValueError(f"alpha={alpha} does not match deg p = {p.degree}")
    one_minus_t = IntPolynomial([1, -1])
    h = IntPolynomial()
    for i, g in enumerate(p.coeffs):
        if g:
            h = h + (one_minus_t ** (alpha - i)).shift(i) * g
    mult = multiplicity_at_minus_one(p)
    if h.degree != alpha - mult:
        raise AssertionError(f"deg h = {h.degree} but alpha - M = {alpha - mult}")
    if h[alpha] != (-1) ** alpha * eval_at(p, -1):
        raise AssertionError("top h coefficient disagrees with (-1)^alpha p(-1)")
    return HData(h=h, alpha=alpha, a_invariant=h.degree - alpha)


def b_sequence(p: IntPolynomial) -> tuple[int, ...]:
    """Coefficients ``b_1..b_d`` of ``sum_i g_i (x-1)^(i-1)`` for ``p = sum_i g_i x^i``."""
    _require_nonzero(p)
    if p.degree < 1:
        raise ValueError("b-sequence needs a polynomial of degree at least 1")
    x_minus_one = IntPolynomial([-1, 1])
    acc = IntPolynomial()
    for i in range(1, p.degree + 1):
        acc = acc + (x_minus_one ** (i - 1)) * p[i]
    return tuple(acc[k] for k in range(p.degree))


def from_b_sequence(b: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`b_sequence`: recover ``g_1..g_d``."""
    x_plus_one = IntPolynomial([1, 1])
    acc = IntPolynomial()
    for i, bi in enumerate(b):
        acc = acc + (x_plus_one ** i) * bi
    return tuple(acc[k] for k in range(len(b)))


def render(p: IntPolynomial, var: str = "x") -> str:
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def to_json(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json(data: Sequence[str | int]) -> IntPolynomial:
    return IntPolynomial(int(c) for c in data)
