"""Exact fractional chromatic number with a primal/dual optimality certificate.

The covering LP

    minimize  sum_I y_I   subject to   sum_{I containing v} y_I >= 1  for every v,
              y >= 0,

ranges over independent sets ``I``. Only maximal independent sets are
used: any solution on smaller sets can be pushed up to a maximal superset
without changing the objective. Its dual is the packing LP

    maximize  sum_v w_v   subject to   w(I) <= 1  for every maximal I,  w >= 0,

which has the all-slack basis as a feasible start. The solver runs the
rational simplex on the packing LP, reads the cover ``y`` off the optimal
row multipliers, and re-verifies both sides from scratch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import simplex
from .errors import CertificateError, ContractViolation, FraccolorError
from .graph import Graph
from .independent import (
    MAX_ENUMERATION_VERTICES,
    MAX_MAXIMAL_SETS,
    is_independent,
    maximal_independent_sets,
)


def rational_to_json(q: Fraction) -> dict[str, str]:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: Mapping[str, str]) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


@dataclass(frozen=True)
class WeightFunction:
    """Non-negative rational vertex weights and their weight ordering.

    ``ordering`` lists vertices by non-increasing weight, equal weights
    in ascending index order.
    """

    graph: Graph
    weights: tuple[Fraction, ...]
    ordering: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ContractViolation("one weight per vertex is required")
        ws = tuple(Fraction(w) for w in self.weights)
        if any(w < 0 for w in ws):
            raise ContractViolation("weights must be non-negative")
        object.__setattr__(self, "weights", ws)
        order = sorted(range(len(ws)), key=lambda v: (-ws[v], v))
        object.__setattr__(self, "ordering", tuple(order))

    @classmethod
    def uniform(cls, g: Graph, value=1) -> "WeightFunction":
        return cls(g, (Fraction(value),) * g.n)

    def __getitem__(self, v: int) -> Fraction:
        return self.weights[v]

    def of(self, a) -> Fraction:
        """Total weight of the vertex set ``a``."""
        return sum((self.weights[v] for v in a), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def scaled(self, factor: Fraction) -> "WeightFunction":
        return WeightFunction(self.graph, tuple(w * factor for w in self.weights))

    def to_json(self) -> dict:
        return {
            "weights": [rational_to_json(w) for w in self.weights],
            "ordering": list(self.ordering),
        }


@dataclass(frozen=True)
class ChiFCertificate:
    graph: Graph
    value: Fraction
    #: y_I for every maximal independent set used as an LP column.
    primal: Mapping[tuple[int, ...], Fraction]
    dual: WeightFunction

    @property
    def primal_support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s for s, y in self.primal.items() if y > 0)

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "value": rational_to_json(self.value),
            "primal": [
                {"set": list(s), "y": rational_to_json(y)}
                for s, y in sorted(self.primal.items())
            ],
            "dual": self.dual.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, obj: Mapping) -> "ChiFCertificate":
        g = Graph(obj["n"], [tuple(e) for e in obj["edges"]])
        primal = {tuple(p["set"]): rational_from_json(p["y"]) for p in obj["primal"]}
        dual = WeightFunction(g, tuple(rational_from_json(w) for w in obj["dual"]["weights"]))
        return cls(g, rational_from_json(obj["value"]), primal, dual)


def solve_chi_f(
    g: Graph,
    *,
    max_n: int = MAX_ENUMERATION_VERTICES,
    max_mis: int = MAX_MAXIMAL_SETS,
) -> ChiFCertificate:
    """Fractional chromatic number of ``g`` with a verified certificate.

    Raises
    ------
    ResourceLimitError
        If the maximal independent sets cannot be enumerated within the caps.
    """
    if g.n < 1:
        raise ContractViolation("fractional chromatic number needs at least one vertex")
    family = maximal_independent_sets(g, max_n=max_n, max_count=max_mis)
    sets = family.sets
    one = Fraction(1)
    rows = []
    for s in sets:
        row = [Fraction(0)] * g.n
        for v in s:
            row[v] = one
        rows.append(row)
    res = simplex.maximize([one] * g.n, rows, [one] * len(sets))
    cert = ChiFCertificate(
        g,
        res.value,
        dict(zip(sets, res.y)),
        WeightFunction(g, res.x),
    )
    problems = certificate_problems(g, cert, maximal_sets=sets)
    if problems:
        # LP duality guarantees a certificate; reaching here is a solver bug.
        raise FraccolorError("solver produced an invalid certificate: " + "; ".join(problems))
    return cert


def certificate_problems(g: Graph, cert: ChiFCertificate, *, maximal_sets=None) -> list[str]:
    """Reasons ``cert`` fails exact verification for ``g`` (empty if valid)."""
    problems = []
    if cert.graph != g:
        return ["certificate refers to a different graph"]
    if maximal_sets is None:
        maximal_sets = maximal_independent_sets(g).sets
    cover = [Fraction(0)] * g.n
    for s, y in cert.primal.items():
        if y < 0:
            problems.append(f"negative primal value on {list(s)}")
        if not is_independent(g, s):
            problems.append(f"primal set {list(s)} is not independent")
            continue
        for v in s:
            cover[v] += y
    uncovered = [v for v in g.vertices() if cover[v] < 1]
    if uncovered:
        problems.append(f"vertices covered less than once: {uncovered}")
    w = cert.dual.weights
    if any(x < 0 for x in w):
        problems.append("negative dual weight")
    for s in maximal_sets:
        ws = sum((w[v] for v in s), Fraction(0))
        if ws > 1:
            problems.append(f"dual weight {ws} > 1 on independent set {list(s)}")
            break
    primal_obj = sum(cert.primal.values(), Fraction(0))
    dual_obj = sum(w, Fraction(0))
    if primal_obj != cert.value:
        problems.append(f"primal objective {primal_obj} != value {cert.value}")
    if dual_obj != cert.value:
        problems.append(f"dual objective {dual_obj} != value {cert.value}")
    return problems


def verify_certificate(g: Graph, cert: ChiFCertificate) -> bool:
    return not certificate_problems(g, cert)


def require_valid(g: Graph, cert: ChiFCertificate) -> None:
    problems = certificate_problems(g, cert)
    if problems:
        raise CertificateError("; ".join(problems))


def dual_weights(cert: ChiFCertificate) -> WeightFunction:
    """The certificate's optimal vertex weights ``w`` with ``w(V) = chi_f``."""
    return cert.dual


def fractional_chromatic_number(g: Graph, **caps) -> Fraction:
    return solve_chi_f(g, **caps).value


def independent_weight_max(g: Graph, w: WeightFunction) -> Fraction:
    """Largest ``w(I)`` over independent sets ``I`` (attained on a maximal one)."""
    return max(w.of(s) for s in maximal_independent_sets(g))


def is_dual_feasible(g: Graph, w: WeightFunction) -> bool:
    """True when every independent set has weight at most 1, so ``chi_f(g) >= w(V)``."""
    return independent_weight_max(g, w) <= 1


__all__ = [
    "WeightFunction",
    "ChiFCertificate",
    "solve_chi_f",
    "verify_certificate",
    "certificate_problems",
    "dual_weights",
    "fractional_chromatic_number",
    "is_dual_feasible",
    "rational_to_json",
    "rational_from_json",
]
