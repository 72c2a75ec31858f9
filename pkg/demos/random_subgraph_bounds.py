"""
Fractional chromatic number of random subgraphs
===============================================

Keep each edge with probability p and compare how often chi_f stays above
the threshold with the probability the bound promises.
"""

from fractions import Fraction

import fraccolor as fc
from fraccolor.harness import reports_to_csv, theorem_exact_probability

# The closed-form side: threshold and probability for t = 8, p = 1/2.
bounds = fc.theorem_bounds(8, Fraction(1, 2), 2)
print("threshold ~", float(bounds.threshold), " probability ~", float(bounds.probability))
print("corollary threshold ~", float(bounds.corollary_threshold),
      " probability", bounds.corollary_probability)

# Monte Carlo on K8, reproducible from the seed.
k8 = fc.complete_graph(8)
cfg = fc.SampleConfig(Fraction(1, 2), seed=7, trials=300)
reports = [
    fc.mc_theorem(k8, Fraction(1, 2), 2, cfg, name="K8"),
    fc.mc_theorem(k8, Fraction(1, 2), None, cfg, corollary=True, name="K8"),
]
print(reports_to_csv(reports))

# Exact probability on a small graph by summing over all 2^m subgraphs.
prob, used = theorem_exact_probability(fc.cycle_graph(7), Fraction(3, 4), 4)
print("C7 exact probability", prob, "vs claimed", float(used.probability))

# Below p = 1/2 the argument behind the bound does not apply; reports carry a flag.
print("proof regime at p=1/4:", fc.theorem_bounds(6, Fraction(1, 4), 1).proof_regime)
