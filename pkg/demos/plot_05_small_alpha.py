"""
Graphs with independence number two, and clique bouquets
========================================================

"""

from indpoly import closed_forms as cf
from indpoly.chordal import decycling_number
from indpoly.engine import eval_minus_one
from indpoly.families import TwoCliqueParams, exponential_witness, exponential_witness_radii, two_clique

# two cliques joined through one vertex: value (a-1)(n-a-1) - t
for n in range(3, 9):
    lo, hi = cf.alpha2_value_range(n)
    seen = sorted({cf.two_clique_minus_one(TwoCliqueParams(n, a, t))
                   for a in range(1, n // 2 + 1) for t in range(1, n - a + 1)})
    print(n, (lo, hi), seen == list(range(lo, hi + 1)))

# realise a chosen value
p = cf.realize_value(10, 7)
print(p, eval_minus_one(two_clique(p)))

# bouquets of cliques reach values exponential in n
for n in (6, 11, 16, 21):
    g = exponential_witness(n)
    print(n, exponential_witness_radii(n), eval_minus_one(g), ">=", cf.exponential_lower_bound(n))

# and every value respects |P(-1)| <= 2^(decycling number)
g = exponential_witness(11)
print(abs(eval_minus_one(g)), "<=", 2 ** decycling_number(g))
