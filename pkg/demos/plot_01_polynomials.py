"""
Independence polynomials and their value at -1
==============================================

"""

# build a graph from an edge list; vertices are 0..n-1
from indpoly import from_edge_list, independence_polynomial, report
from indpoly.poly import render

p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
p = independence_polynomial(p4)
print("P_4:", render(p))

# the engine and the brute-force subset count agree
from indpoly.engine import brute_force_polynomial
assert brute_force_polynomial(p4) == p

# a full invariant report: alpha, P(-1), multiplicity of -1, h-polynomial
r = report(p4)
print("alpha =", r.alpha, " P(-1) =", r.value_at_minus_one, " M =", r.multiplicity)
print("h(t) =", render(r.h.h, "t"), " a-invariant =", r.h.a_invariant)

# graph6 round trip
from indpoly import encode_graph6, parse_graph6
code = encode_graph6(p4)
print("graph6:", code)
assert parse_graph6(code) == p4

# path values at -1 repeat with period 6
from indpoly.closed_forms import path_minus_one
from indpoly.families import path
from indpoly.engine import eval_minus_one
print([eval_minus_one(path(n)) for n in range(13)])
assert all(eval_minus_one(path(n)) == path_minus_one(n) for n in range(40))
