"""
Cochordal graphs and clique complexes
=====================================

"""

from indpoly import closed_forms as cf
from indpoly.chordal import (b_sequence_of_cochordal, complement_component_count,
                             is_cochordal, leaf_order, maximal_cliques, vertex_connectivity)
from indpoly.engine import eval_minus_one, independence_polynomial
from indpoly.families import cochordal_symmetric_witness, complete_minus_edge, cycle
from indpoly.graph import complement
from indpoly.poly import multiplicity_at_minus_one, render

# the witness (d-2)K_1 plus K_{m+2}-e has polynomial (1+x)^d + m x (1+x)^(d-2)
g = cochordal_symmetric_witness(4, 2)
p = independence_polynomial(g)
print(render(p), "m =", cf.cochordal_symmetric_form(p), "cochordal:", is_cochordal(g))

# b-sequences of cochordal graphs are positive
print(b_sequence_of_cochordal(complete_minus_edge(3)), b_sequence_of_cochordal(g))

# P(-1) = 1 - (components of the complement)
print(eval_minus_one(g), 1 - complement_component_count(g))

# the chordal complement has a leaf order; a hollow triangle has none
print(leaf_order(maximal_cliques(complement(g))))
print(leaf_order([0b011, 0b110, 0b101]))
print("C_5 cochordal:", is_cochordal(cycle(5)))

# multiplicity of -1 equals the connectivity of the complement
co = complete_minus_edge(4)
print(vertex_connectivity(co), multiplicity_at_minus_one(independence_polynomial(complement(co))))
