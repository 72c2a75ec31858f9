"""
Heavy independent sets from low-degree vertices
===============================================

Split a vertex set by backward degree, color the low-degree part greedily
and keep the heaviest color class.
"""

from fractions import Fraction

import fraccolor as fc
from fraccolor.witness import find_dense_principal_subset, lemma6_bound

g = fc.cycle_graph(9)
w = fc.solve_chi_f(g).dual
ground = fc.OrderedGround.from_weights(w)
everything = range(g.n)
s, x = Fraction(5, 2), Fraction(3)

# No principal subset is dense enough here, so extraction is allowed.
print("dense principal subset:", find_dense_principal_subset(g, ground, everything, s, x))

dec = fc.decompose(g, ground, w, everything, x, s)
print("high backward degree:", dec.L)
print("low backward degree: ", dec.S)

chosen = fc.extract_heavy_independent(g, ground, w, everything, x, s)
print("chosen independent set:", chosen, "weight", w.of(chosen))
print("guaranteed at least:  ", lemma6_bound(w, everything, x, s))

# Asking for a lower degree cutoff on a clique breaks the hypothesis.
k5 = fc.complete_graph(5)
w5 = fc.solve_chi_f(k5).dual
try:
    fc.extract_heavy_independent(k5, fc.OrderedGround.from_weights(w5), w5, range(5), Fraction(1), 5)
except fc.ContractViolation as exc:
    print("refused:", exc)
