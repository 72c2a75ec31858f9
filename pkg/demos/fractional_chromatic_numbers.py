"""
Exact fractional chromatic numbers
==================================

Solve a few classic graphs, print the optimum as a fraction, and check
the certificate that comes with it.
"""

import json
from fractions import Fraction

import fraccolor as fc
from fraccolor.independent import independence_number
from fraccolor.lp import ChiFCertificate, verify_certificate

graphs = {
    "C5": fc.cycle_graph(5),
    "C7": fc.cycle_graph(7),
    "K4": fc.complete_graph(4),
    "Petersen": fc.petersen_graph(),
    "Grotzsch": fc.grotzsch_graph(),
}

# The value is an exact rational; the dual weights are a vertex weighting
# that no independent set can carry more than 1 of.
for name, g in graphs.items():
    cert = fc.solve_chi_f(g)
    assert verify_certificate(g, cert)
    print(f"{name:9s} n={g.n:2d} chi_f = {cert.value}  (n/alpha lower bound {Fraction(g.n, independence_number(g))})")

# The primal side: a fractional coloring as weights on independent sets.
cert = fc.solve_chi_f(graphs["C5"])
for independent_set, weight in sorted(cert.primal.items()):
    print("  ", independent_set, weight)

# Certificates survive a JSON round trip with exact rationals.
text = cert.dumps()
again = ChiFCertificate.from_json(json.loads(text))
print(len(text), "bytes of JSON, value read back:", again.value, verify_certificate(graphs["C5"], again))
