"""
Whiskering and caterpillars
===========================

"""

from indpoly import closed_forms as cf
from indpoly.engine import report
from indpoly.families import CaterpillarSpec, WhiskerSpec, caterpillar, cycle, whisker
from indpoly.poly import render

# attach leaves to a 5-cycle; the formula sums over independent sets of the base
spec = WhiskerSpec(cycle(5), (1, 0, 2, 0, 1))
g = whisker(spec)
r = report(g)
print("n =", g.n, render(r.poly))
assert cf.whisker_polynomial(spec) == r.poly
print("P(-1):", cf.whisker_minus_one(spec), r.value_at_minus_one)
print("alpha:", cf.whisker_alpha(spec), r.alpha)

# two leaves on every base vertex always gives a palindrome
two = WhiskerSpec(cycle(5), (2,) * 5)
print(render(report(whisker(two)).poly), report(whisker(two)).symmetric)

# caterpillars: gaps between legged spine vertices drive the value
spec = CaterpillarSpec(7, (1, 0, 0, 1, 0, 0, 1))
gaps = cf.caterpillar_gaps(spec)
print(gaps)
r = report(caterpillar(spec))
print("P(-1):", cf.caterpillar_minus_one(spec), r.value_at_minus_one,
      " pG*:", cf.caterpillar_pseudo_gorenstein(spec), r.pseudo_gorenstein_star)
