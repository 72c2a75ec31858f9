"""Heavy independent sets inside vertex sets free of dense principal subsets,
and the closed-form random-subgraph bounds.

For a vertex set ``A`` and a degree threshold ``x``, each vertex of ``A``
gets a backward degree: its neighbors in ``A`` that come earlier in the
weight order. Vertices with backward degree at least ``x`` form ``L``;
the rest, ``S``, induce a graph that first-fit colors with at most
``floor(x) + 1`` colors along the weight order. When ``A`` contains no
s-principal subset of average degree at least ``x``, ``L`` splits into a
2-sparse part of ``A`` and an s-sparse part of ``V``, which bounds
``w(L)`` and leaves a color class of ``S`` with weight at least
``(w(A)/2 - w(V)/s) / floor(x + 1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from . import reals
from .errors import ContractViolation, FraccolorError, ResourceLimitError
from .graph import Graph, average_degree, greedy_coloring, induced_subgraph, vertex_set
from .independent import is_independent, maximal_independent_sets
from .lp import WeightFunction, rational_to_json
from .order import OrderedGround
from .reals import Interval, Real

Threshold = Union[Fraction, int, Real]

#: Largest ``|A|`` for which the no-dense-principal-subset hypothesis is
#: checked by enumerating subsets.
HYPOTHESIS_CHECK_MAX = 16


def _real(x: Threshold) -> Real:
    return Real.coerce(x)


def at_least(q: Fraction, x: Threshold) -> bool:
    """Exact test ``q >= x`` for rational ``q``."""
    return _real(x).compare(q) <= 0


def backward_degrees(g: Graph, ground: OrderedGround, a: Iterable[int]) -> dict[int, int]:
    """Neighbors of each ``v`` in ``a`` that precede ``v`` in the ground order."""
    verts = vertex_set(g, a)
    rank = ground.rank
    inside = set(verts)
    return {
        v: sum(1 for u in g.neighbors(v) if u in inside and rank[u] < rank[v])
        for v in verts
    }


def find_dense_principal_subset(
    g: Graph, ground: OrderedGround, a: Iterable[int], s, x: Threshold,
    *, max_size: int = HYPOTHESIS_CHECK_MAX,
) -> tuple[int, ...] | None:
    """A subset of ``a`` that is s-principal in ``V`` with average degree in ``g``
    at least ``x``, or ``None`` when no such subset exists."""
    ranked = ground.ranked(a)
    if len(ranked) > max_size:
        raise ResourceLimitError(f"|A|={len(ranked)} exceeds hypothesis-check cap {max_size}")
    s = Fraction(s)
    rank = ground.rank
    for subset in range(1, 1 << len(ranked)):
        members = tuple(ranked[i] for i in range(len(ranked)) if subset >> i & 1)
        cutoff = s * len(members)
        if rank[members[-1]] > cutoff.numerator // cutoff.denominator:
            continue
        if at_least(average_degree(g, members), x):
            return tuple(sorted(members))
    return None


@dataclass(frozen=True)
class Decomposition:
    a: tuple[int, ...]
    x: Threshold
    s: Fraction
    L: tuple[int, ...]
    L1: tuple[int, ...]
    L2: tuple[int, ...]
    S: tuple[int, ...]
    backward_degrees: dict[int, int]
    #: True/False when the hypothesis was checked, None when |A| was too large.
    hypothesis: bool | None
    weights: dict[str, Fraction]

    def to_json(self) -> dict:
        x = self.x
        x_json = (
            Interval.point(x).to_json() if not isinstance(x, Real) else x.interval().to_json()
        )
        return {
            "A": list(self.a),
            "x": x_json,
            "s": rational_to_json(self.s),
            "L": list(self.L),
            "L1": list(self.L1),
            "L2": list(self.L2),
            "S": list(self.S),
            "backward_degrees": {str(v): d for v, d in sorted(self.backward_degrees.items())},
            "hypothesis": self.hypothesis,
            "weights": {k: rational_to_json(v) for k, v in self.weights.items()},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _check_x(x: Threshold) -> None:
    if _real(x).compare(0) <= 0:
        raise ContractViolation("degree threshold x must be positive")


def decompose(
    g: Graph, ground: OrderedGround, w: WeightFunction, a: Iterable[int], x: Threshold, s,
) -> Decomposition:
    """Split ``a`` into low and high backward-degree parts.

    ``L1`` holds the high vertices ``v`` (the j-th one in rank order) with
    more than ``2j`` members of ``a`` up to and including ``v``; ``L2``
    those whose rank exceeds ``s`` times that count. If ``a`` has no
    s-principal subset of average degree at least ``x``, every high vertex
    lands in ``L1`` or ``L2``; a miss raises ``FraccolorError``.
    """
    _check_x(x)
    s = Fraction(s)
    if s < 1:
        raise ContractViolation("s must be at least 1")
    verts = vertex_set(g, a)
    ranked = ground.ranked(verts)
    bdeg = backward_degrees(g, ground, verts)
    high = [v for v in ranked if at_least(Fraction(bdeg[v]), x)]
    high_set = set(high)
    l1, l2 = [], []
    seen_in_a = 0
    j = 0
    for v in ranked:
        seen_in_a += 1
        if v not in high_set:
            continue
        j += 1
        if seen_in_a > 2 * j:
            l1.append(v)
        if ground.rank[v] > s * seen_in_a:
            l2.append(v)
    low = [v for v in ranked if v not in high_set]

    hypothesis = None
    if len(verts) <= HYPOTHESIS_CHECK_MAX:
        hypothesis = find_dense_principal_subset(g, ground, verts, s, x) is None
        if hypothesis and not high_set <= set(l1) | set(l2):
            raise FraccolorError("high backward-degree vertex in neither L1 nor L2")

    weights = {
        "A": w.of(verts),
        "L1": w.of(l1),
        "L2": w.of(l2),
        "S": w.of(low),
        "V": w.total(),
    }
    return Decomposition(
        tuple(verts), x, s,
        tuple(sorted(high)), tuple(sorted(l1)), tuple(sorted(l2)), tuple(sorted(low)),
        bdeg, hypothesis, weights,
    )


def color_classes(g: Graph, ground: OrderedGround, part: Iterable[int]) -> list[tuple[int, ...]]:
    """First-fit classes of ``part`` colored along the ground order."""
    coloring = greedy_coloring(g, ground.ranked(part))
    classes: dict[int, list[int]] = {}
    for v, c in coloring.items():
        classes.setdefault(c, []).append(v)
    return [tuple(sorted(classes[c])) for c in sorted(classes)]


def _require_hypothesis(g, ground, a, s, x) -> None:
    if len(a) > HYPOTHESIS_CHECK_MAX:
        return
    bad = find_dense_principal_subset(g, ground, a, s, x)
    if bad is not None:
        raise ContractViolation(
            f"A contains the {s}-principal set {list(bad)} of average degree "
            f"{average_degree(g, bad)} >= x"
        )


def lemma6_bound(w: WeightFunction, a: Iterable[int], x: Threshold, s) -> Fraction:
    """``(w(A)/2 - w(V)/s) / floor(x + 1)``, the guaranteed heaviest-class weight."""
    return (w.of(a) / 2 - w.total() / Fraction(s)) / (_real(x) + 1).floor()


def extract_heavy_independent(
    g: Graph, ground: OrderedGround, w: WeightFunction, a: Iterable[int], x: Threshold, s,
) -> tuple[int, ...]:
    """Heaviest first-fit color class of the low backward-degree part of ``a``.

    The result is independent and weighs at least :func:`lemma6_bound`.

    Raises
    ------
    ContractViolation
        If ``a`` (when small enough to check) contains an s-principal
        subset with average degree at least ``x``.
    """
    verts = vertex_set(g, a)
    _check_x(x)
    _require_hypothesis(g, ground, verts, s, x)
    if not verts:
        return ()
    dec = decompose(g, ground, w, verts, x, s)
    classes = color_classes(g, ground, dec.S)
    if len(classes) > (_real(x) + 1).floor():
        raise FraccolorError("first-fit used more than floor(x) + 1 colors")
    if not classes:
        return ()
    best = max(range(len(classes)), key=lambda i: (w.of(classes[i]), -i))
    chosen = classes[best]
    if not is_independent(g, chosen):
        raise FraccolorError("color class is not independent")
    if w.of(chosen) < lemma6_bound(w, verts, x, s):
        raise FraccolorError("heaviest class is lighter than the guaranteed bound")
    return chosen


def lemma6_weight_check(
    g: Graph, ground: OrderedGround, w: WeightFunction, a: Iterable[int], x: Threshold, s,
) -> tuple[bool, Fraction, Fraction]:
    """Compare ``w(A)`` with ``2 floor(x + 1) + 2 w(V)/s``.

    ``a`` must satisfy the hypothesis of :func:`extract_heavy_independent`
    and every independent subset of ``a`` must weigh at most 1.
    """
    _check_x(x)
    verts = vertex_set(g, a)
    _require_hypothesis(g, ground, verts, s, x)
    if verts:
        sub, index = induced_subgraph(g, verts)
        heaviest = max(w.of(index[i] for i in mis) for mis in maximal_independent_sets(sub))
        if heaviest > 1:
            raise ContractViolation(f"A has an independent subset of weight {heaviest} > 1")
    lhs = w.of(verts)
    rhs = 2 * (_real(x) + 1).floor() + 2 * w.total() / Fraction(s)
    return lhs <= rhs, lhs, rhs


# -- closed-form bounds ------------------------------------------------------


def _rational_in_unit(p) -> Fraction:
    p = Fraction(p)
    if not 0 < p < 1:
        raise ContractViolation(f"p must lie in (0, 1), got {p}")
    return p


def log_term(p, t) -> Real:
    """``log_{1/p}(e t)``."""
    return reals.log_base_inverse(_rational_in_unit(p), reals.E * Fraction(t))


def degree_threshold(p, s, c: Threshold) -> Real:
    """``2 log_{1/p}(e s) + 2c``: the average degree above which principal
    sets are unlikely to stay independent."""
    return 2 * log_term(p, s) + 2 * _real(c)


def corollary_c(p, t) -> Real:
    """The choice ``c = log_{1/p}(e t)``."""
    return log_term(p, t)


@dataclass(frozen=True)
class BoundReport:
    t: Fraction
    p: Fraction
    c: Real
    applicable: bool
    #: The proof's step Pr(A independent) = p^e(A) needs p >= 1/2 when p
    #: is the probability of keeping an edge.
    proof_regime: bool
    log_term: Real
    x: Real
    threshold: Real
    p_to_c: Real
    probability: Real
    corollary_threshold: Real
    corollary_probability: Fraction

    @property
    def vacuous(self) -> bool:
        return self.probability.compare(0) <= 0

    def to_json(self, prec: int = reals.DEFAULT_PRECISION) -> dict:
        def iv(r: Real) -> dict:
            return r.interval(prec).to_json()

        return {
            "t": rational_to_json(self.t),
            "p": rational_to_json(self.p),
            "c": iv(self.c),
            "theorem_applicable": self.applicable,
            "proof_regime": self.proof_regime,
            "vacuous": self.vacuous,
            "log_term": iv(self.log_term),
            "x": iv(self.x),
            "threshold": iv(self.threshold),
            "p_to_c": iv(self.p_to_c),
            "probability": iv(self.probability),
            "corollary_threshold": iv(self.corollary_threshold),
            "corollary_probability": rational_to_json(self.corollary_probability),
        }

    def dumps(self, prec: int = reals.DEFAULT_PRECISION) -> str:
        return json.dumps(self.to_json(prec), indent=2, sort_keys=True)


def theorem_bounds(t, p, c: Threshold) -> BoundReport:
    """Threshold ``t / (4 log_{1/p}(e t) + 4 + 4c)`` and probability
    ``(1 - 2p^c) / (1 - p^c)``, plus the corollary pair
    ``t / (8 log_{1/p}(e t) + 4)`` and ``1 - 1/(2t)``.

    Values are computed for any ``t >= 1``; ``applicable`` is false below 2.
    """
    t = Fraction(t)
    p = _rational_in_unit(p)
    c = _real(c)
    if c.compare(0) <= 0:
        raise ContractViolation("c must be positive")
    if t < 1:
        raise ContractViolation("t must be at least 1")
    lt = log_term(p, t)
    q = reals.power(p, c)
    return BoundReport(
        t=t,
        p=p,
        c=c,
        applicable=t >= 2,
        proof_regime=p >= Fraction(1, 2),
        log_term=lt,
        x=2 * lt + 2 * c,
        threshold=t / (4 * lt + 4 + 4 * c),
        p_to_c=q,
        probability=(1 - 2 * q) / (1 - q),
        corollary_threshold=t / (8 * lt + 4),
        corollary_probability=1 - 1 / (2 * t),
    )


def scaled_weight_function(w: WeightFunction, x: Threshold) -> WeightFunction:
    """``w / (2x + 4)``, dividing by the upper end of an enclosure of ``2x + 4``
    so the scaled weights never exceed the true ones."""
    _check_x(x)
    divisor = (2 * _real(x) + 4).interval().hi
    return w.scaled(1 / divisor)
