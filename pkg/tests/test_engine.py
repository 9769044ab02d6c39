import pytest
from hypothesis import given, settings

from indpoly.chordal import decycling_number
from indpoly.engine import (
    GuardExceeded,
    brute_force_polynomial,
    eval_minus_one,
    independence_number,
    independence_number_bnb,
    independence_polynomial,
    report,
)
from indpoly.families import (
    BigStarParams,
    big_star,
    complete,
    complete_minus_edge,
    cycle,
    path,
)
from indpoly.graph import closed_neighborhood, delete, disjoint_union, from_edge_list
from indpoly.poly import IntPolynomial, eval_at

from .strategies import graphs

GOLDEN_113335 = [1, 15, 91, 296, 577, 714, 575, 296, 91, 15, 1]


def test_brute_force_examples(p4):
    assert brute_force_polynomial(complete(3)).coeffs == (1, 3)
    assert brute_force_polynomial(p4).coeffs == (1, 4, 3)
    assert brute_force_polynomial(from_edge_list(0, [])).coeffs == (1,)


def test_brute_force_guard(monkeypatch):
    with pytest.raises(GuardExceeded):
        brute_force_polynomial(path(31))
    monkeypatch.setenv("INDPOLY_MAX_N", "4")
    with pytest.raises(GuardExceeded):
        brute_force_polynomial(path(5))


def test_engine_examples():
    assert independence_polynomial(big_star(BigStarParams((1, 1, 5)))).coeffs == (1, 8, 21, 21, 8, 1)
    assert list(independence_polynomial(big_star(BigStarParams((1, 1, 1, 3, 3, 5))))) == GOLDEN_113335
    assert independence_polynomial(complete_minus_edge(3)).coeffs == (1, 3, 1)


def test_engine_handles_sixty_vertices():
    g = path(60)
    p = independence_polynomial(g)
    # Fibonacci: P_{P_n}(1) = F(n+2)
    a, b = 1, 1
    for _ in range(60):
        a, b = b, a + b
    assert eval_at(p, 1) == b
    assert p.degree == 30


def test_independence_number_examples():
    assert independence_number(complete(6)) == 1
    assert independence_number(path(5)) == 3
    assert independence_number(big_star(BigStarParams((2, 2, 2)))) == 4
    assert independence_number_bnb(big_star(BigStarParams((2, 2, 2)))) == 4


def test_eval_minus_one_examples():
    assert eval_minus_one(path(6)) == 1
    assert eval_minus_one(cycle(3)) == -2
    assert eval_minus_one(from_edge_list(0, [])) == 1


def test_report_examples(p4):
    k2 = report(complete(2))
    assert (k2.alpha, k2.value_at_minus_one, k2.pseudo_gorenstein_star) == (1, -1, True)
    r = report(p4)
    assert r.multiplicity == 1 and r.h.a_invariant == -1
    s = report(big_star(BigStarParams((1, 1, 5))))
    assert s.symmetric and s.value_at_minus_one == 0


def test_report_brute_force_path(p4):
    assert report(p4, brute_force=True) == report(p4)


@settings(max_examples=300)
@given(graphs(max_n=14))
def test_engine_matches_oracle(g):
    p = independence_polynomial(g)
    assert p == brute_force_polynomial(g)
    assert eval_minus_one(g) == eval_at(p, -1)
    assert independence_number_bnb(g) == p.degree


@given(graphs(min_n=1, max_n=11))
def test_deletion_identity(g):
    p = brute_force_polynomial(g)
    for v in range(g.n):
        rest = brute_force_polynomial(delete(g, 1 << v))
        closed = brute_force_polynomial(delete(g, closed_neighborhood(g, 1 << v)))
        assert p == rest + closed.shift(1)


@given(graphs(max_n=9), graphs(max_n=9))
def test_multiplicativity(g, h):
    assert independence_polynomial(disjoint_union(g, h)) == brute_force_polynomial(g) * brute_force_polynomial(h)


@given(graphs(max_n=12))
def test_report_invariants(g):
    r = report(g)
    assert r.alpha == r.poly.degree
    assert r.value_at_minus_one == eval_at(r.poly, -1)
    assert r.pseudo_gorenstein_star == (r.value_at_minus_one == (-1) ** r.alpha)
    assert r.h.a_invariant == -r.multiplicity


@settings(max_examples=60)
@given(graphs(max_n=11))
def test_engstrom_bound(g):
    assert abs(eval_minus_one(g)) <= 2 ** decycling_number(g)


def test_zero_vertex_graph():
    assert independence_polynomial(from_edge_list(0, [])) == IntPolynomial([1])
