"""Exact fractional chromatic numbers, weight-ordered sparse sets, and
random-subgraph lower bounds checked by enumeration and Monte Carlo."""

from .errors import CertificateError, ContractViolation, FraccolorError, ResourceLimitError
from .graph import (
    Graph,
    average_degree,
    complete_graph,
    cycle_graph,
    degeneracy_ordering,
    edge_count_within,
    edgeless_graph,
    grotzsch_graph,
    induced_subgraph,
    kneser_graph,
    mycielskian,
    path_graph,
    petersen_graph,
)
from .independent import all_independent_sets, is_independent, maximal_independent_sets
from .lp import ChiFCertificate, WeightFunction, dual_weights, solve_chi_f, verify_certificate
from .order import (
    OrderedGround,
    SparseReport,
    is_principal,
    is_sparse,
    is_sparse_bruteforce,
    prefix,
    sparse_weight_bound_check,
)
from .witness import (
    BoundReport,
    Decomposition,
    backward_degrees,
    decompose,
    extract_heavy_independent,
    lemma6_weight_check,
    scaled_weight_function,
    theorem_bounds,
)
from .harness import (
    McReport,
    SampleConfig,
    enumerate_principal_candidates,
    exact_event_probability,
    mc_lemma5,
    mc_theorem,
    sample_subgraph,
)

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "ContractViolation",
    "FraccolorError",
    "ResourceLimitError",
    "Graph",
    "average_degree",
    "complete_graph",
    "cycle_graph",
    "degeneracy_ordering",
    "edge_count_within",
    "edgeless_graph",
    "grotzsch_graph",
    "induced_subgraph",
    "kneser_graph",
    "mycielskian",
    "path_graph",
    "petersen_graph",
    "all_independent_sets",
    "is_independent",
    "maximal_independent_sets",
    "ChiFCertificate",
    "WeightFunction",
    "dual_weights",
    "solve_chi_f",
    "verify_certificate",
    "OrderedGround",
    "SparseReport",
    "is_principal",
    "is_sparse",
    "is_sparse_bruteforce",
    "prefix",
    "sparse_weight_bound_check",
    "BoundReport",
    "Decomposition",
    "backward_degrees",
    "decompose",
    "extract_heavy_independent",
    "lemma6_weight_check",
    "scaled_weight_function",
    "theorem_bounds",
    "McReport",
    "SampleConfig",
    "enumerate_principal_candidates",
    "exact_event_probability",
    "mc_lemma5",
    "mc_theorem",
    "sample_subgraph",
]
