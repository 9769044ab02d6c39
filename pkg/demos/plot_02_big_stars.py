"""
Big stars: the value at -1 read off arm lengths
===============================================

"""

from itertools import combinations_with_replacement

from indpoly import closed_forms as cf
from indpoly.engine import report
from indpoly.families import BigStarParams, big_star
from indpoly.poly import render

# G(1,1,5): three arms glued at a centre; its polynomial is a palindrome
p = BigStarParams((1, 1, 5))
r = report(big_star(p))
print(render(r.poly), "symmetric:", r.symmetric)

# arm lengths mod 6 decide P(-1) without building the graph
for arms in [(2, 2, 3), (2, 3, 3), (2, 2, 2, 3), (3, 3, 3), (1, 4, 4)]:
    p = BigStarParams(arms)
    r = report(big_star(p))
    print(arms, "closed form", cf.big_star_minus_one(p), "engine", r.value_at_minus_one,
          "alpha", cf.big_star_alpha(p), "pG*", cf.big_star_pseudo_gorenstein(p))

# scan a box of stars for palindromes: only G(1,1,5) turns up
hits = [arms for q in (3, 4) for arms in combinations_with_replacement(range(1, 7), q)
        if report(big_star(BigStarParams(arms))).symmetric]
print("symmetric big stars:", hits)

# the six-arm star that survives the coefficient argument is not a palindrome
print(render(report(big_star(BigStarParams((1, 1, 1, 3, 3, 5)))).poly))
