"""
Sparse sets in a weight order
=============================

Rank the vertices by their dual weights and test which subsets are
sparse with respect to a prefix.
"""

from itertools import combinations

import fraccolor as fc

g = fc.grotzsch_graph()
w = fc.solve_chi_f(g).dual
ground = fc.OrderedGround.from_weights(w)
print("weights:", [str(x) for x in w.weights])
print("order:  ", ground.ordering)

# A set is principal when it fits in the prefix of length s * |X|.
first_two = ground.ordering[:2]
print("first two vertices principal for s=1:", fc.is_principal(ground, first_two, None, 1))

# The prefix-count test also reports where it fails.
report = fc.is_sparse(ground, ground.ordering[-3:], None, 2)
print("last three vertices 2-sparse:", report.verdict)
report = fc.is_sparse(ground, ground.ordering[:3], None, 2)
print("first three vertices 2-sparse:", report.verdict, "witness prefix", report.witness_k)

# Count the 2-sparse triples and confirm they are all light.
sparse_triples = [x for x in combinations(range(g.n), 3) if fc.is_sparse(ground, x, None, 2)]
heaviest = max(w.of(x) for x in sparse_triples)
print(f"{len(sparse_triples)} sparse triples, heaviest {heaviest} <= w(V)/2 = {w.total() / 2}")
