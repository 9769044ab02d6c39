import pytest

from indpoly.chordal import is_chordal, is_cochordal
from indpoly.engine import brute_force_polynomial, eval_minus_one, independence_polynomial
from indpoly.families import (
    BigStarParams,
    BouquetParams,
    CaterpillarSpec,
    TwoCliqueParams,
    WhiskerSpec,
    big_star,
    caterpillar,
    clique_bouquet,
    cochordal_symmetric_witness,
    complete,
    complete_minus_edge,
    disjoint_union,
    exponential_witness,
    exponential_witness_radii,
    path,
    two_clique,
    whisker,
)
from indpoly.graph import complement, from_edge_list, is_connected
from indpoly.poly import IntPolynomial

STAR3 = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


def test_basic_constructors():
    assert path(0).n == 0 and independence_polynomial(path(0)) == IntPolynomial([1])
    assert complete_minus_edge(3) == from_edge_list(3, [(0, 2), (1, 2)])  # a P_3 centred at 2
    # complement of the P_3 with centre 2
    assert disjoint_union(complete(2), complete(1)) == complement(complete_minus_edge(3))


@pytest.mark.parametrize("call", [lambda: path(-1), lambda: complete(0), lambda: complete_minus_edge(1)])
def test_basic_constructor_minimums(call):
    with pytest.raises(ValueError):
        call()


def test_big_star():
    assert big_star(BigStarParams((1, 1, 1))) == STAR3
    g = big_star(BigStarParams((1, 1, 5)))
    assert g.n == 8 and g.labels[0] == "x"
    assert independence_polynomial(g) == brute_force_polynomial(g)
    assert independence_polynomial(big_star(BigStarParams((2, 2, 2)))).degree == 4


@pytest.mark.parametrize("arms", [(1, 2), (1, 0, 2)])
def test_big_star_rejects(arms):
    with pytest.raises(ValueError):
        BigStarParams(arms)


def test_whisker():
    g = whisker(WhiskerSpec(complete(2), (2, 2)))
    assert g.n == 6
    assert brute_force_polynomial(g).coeffs == (1, 6, 10, 6, 1)
    h = path(4)
    assert whisker(WhiskerSpec(h, (0, 0, 0, 0))) == h
    assert whisker(WhiskerSpec(complete(1), (1,))) == complete(2)
    with pytest.raises(ValueError):
        WhiskerSpec(complete(2), (1,))


def test_caterpillar():
    assert caterpillar(CaterpillarSpec(3, (0, 1, 0))).edges() == [(0, 1), (1, 2), (1, 3)]
    assert independence_polynomial(caterpillar(CaterpillarSpec(3, (0, 1, 0)))) == independence_polynomial(STAR3)
    assert caterpillar(CaterpillarSpec(2, (1, 1))) == from_edge_list(4, [(0, 1), (0, 2), (1, 3)])
    assert caterpillar(CaterpillarSpec(5, (0,) * 5)) == path(5)
    with pytest.raises(ValueError):
        CaterpillarSpec(2, (1,))


def test_two_clique():
    g = two_clique(TwoCliqueParams(5, 2, 1))
    assert independence_polynomial(g).coeffs == (1, 5, 5)
    assert eval_minus_one(two_clique(TwoCliqueParams(3, 1, 1))) == -1
    assert independence_polynomial(two_clique(TwoCliqueParams(4, 2, 2))).degree <= 2
    assert g.labels == ("u1", "u2", "v1", "v2", "v3")


@pytest.mark.parametrize("args", [(2, 1, 1), (5, 3, 1), (5, 0, 1), (5, 2, 4), (5, 2, 0)])
def test_two_clique_rejects(args):
    with pytest.raises(ValueError):
        TwoCliqueParams(*args)


def test_clique_bouquet():
    assert clique_bouquet(BouquetParams((2,))) == complete(3)
    assert eval_minus_one(clique_bouquet(BouquetParams((2,)))) == -2
    assert eval_minus_one(clique_bouquet(BouquetParams((5, 5)))) == 15
    assert clique_bouquet(BouquetParams((1, 1, 1))) == STAR3
    with pytest.raises(ValueError):
        BouquetParams(())


def test_cochordal_witness():
    assert independence_polynomial(cochordal_symmetric_witness(2, 0)) == IntPolynomial([1, 2, 1])
    assert independence_polynomial(cochordal_symmetric_witness(2, 1)).coeffs == (1, 3, 1)
    expected = IntPolynomial.one_plus_x_pow(3) + (IntPolynomial([1, 1]) * 2).shift(1)
    assert independence_polynomial(cochordal_symmetric_witness(3, 2)) == expected
    with pytest.raises(ValueError):
        cochordal_symmetric_witness(1, 0)


def test_exponential_witness_table():
    assert exponential_witness_radii(6) == (5,)
    assert exponential_witness_radii(11) == (5, 5)
    assert exponential_witness_radii(7) == (3, 3)
    assert exponential_witness_radii(3) == (2,)
    assert eval_minus_one(exponential_witness(6)) == -5
    assert eval_minus_one(exponential_witness(11)) == 15
    assert abs(eval_minus_one(exponential_witness(7))) == 3
    for n in range(3, 40):
        assert exponential_witness(n).n == n
    with pytest.raises(ValueError):
        exponential_witness(2)


def test_vertex_count_identities():
    assert big_star(BigStarParams((3, 1, 4))).n == 9
    assert whisker(WhiskerSpec(path(3), (1, 0, 3))).n == 7
    assert clique_bouquet(BouquetParams((2, 3))).n == 6
    assert two_clique(TwoCliqueParams(9, 3, 2)).n == 9


def test_chordality_claims():
    for n in range(3, 10):
        for a in range(1, n // 2 + 1):
            for t in range(1, n - a + 1):
                g = two_clique(TwoCliqueParams(n, a, t))
                assert is_chordal(g) and is_connected(g)
    for radii in [(1,), (2, 3), (4, 1, 1), (5, 5)]:
        assert is_chordal(clique_bouquet(BouquetParams(radii)))
    for d in range(2, 6):
        for m in range(5):
            assert is_cochordal(cochordal_symmetric_witness(d, m))


def test_family_oracle_agreement():
    instances = [
        big_star(BigStarParams((2, 3, 4))),
        whisker(WhiskerSpec(path(4), (1, 2, 0, 3))),
        caterpillar(CaterpillarSpec(5, (1, 0, 2, 0, 1))),
        two_clique(TwoCliqueParams(10, 4, 3)),
        clique_bouquet(BouquetParams((3, 4, 2))),
        cochordal_symmetric_witness(5, 4),
        exponential_witness(16),
    ]
    for g in instances:
        assert g.n <= 18
        assert independence_polynomial(g) == brute_force_polynomial(g)
