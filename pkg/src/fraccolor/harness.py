"""Random spanning subgraphs, Monte Carlo event frequencies, and exact event
probabilities by enumerating every edge subset.

``G_p`` keeps each edge of ``G`` independently with probability ``p``.
Edge ``i`` (in sorted edge order) of trial ``r`` is decided by one draw
from a Philox counter-based stream keyed by the seed, with the trial index
as the counter block, so trials are reproducible in any order and a larger
``p`` keeps a superset of the edges under the same seed.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from statistics import NormalDist
from typing import Callable, Sequence

import numpy as np

from . import reals
from .errors import ContractViolation, ResourceLimitError
from .graph import Graph, average_degree
from .lp import WeightFunction, rational_to_json, solve_chi_f
from .order import OrderedGround
from .reals import Interval, Real
from .witness import BoundReport, at_least, corollary_c, degree_threshold, theorem_bounds

log = logging.getLogger(__name__)

#: Edge cap for exhaustive subgraph enumeration.
MAX_EXACT_EDGES = 20
#: Vertex cap for enumerating principal candidate sets.
MAX_CANDIDATE_VERTICES = 16
DEFAULT_TRIALS = 1000
DEFAULT_CONFIDENCE = 0.99

_TWO64 = 1 << 64


@dataclass(frozen=True)
class SampleConfig:
    p: Fraction
    seed: int = 0
    trials: int = DEFAULT_TRIALS

    def __post_init__(self):
        p = Fraction(self.p)
        object.__setattr__(self, "p", p)
        if not 0 < p < 1:
            raise ContractViolation(f"p must lie in (0, 1), got {p}")
        if self.trials < 1:
            raise ContractViolation("trials must be positive")
        if not 0 <= self.seed < _TWO64:
            raise ContractViolation("seed must be a 64-bit unsigned integer")


def _draws(seed: int, trial: int, m: int) -> list[int]:
    bits = np.random.Philox(key=seed, counter=[0, trial, 0, 0])
    return [int(u) for u in bits.random_raw(m)] if m else []


def sample_edge_mask(g: Graph, cfg: SampleConfig, trial_index: int) -> int:
    """Bitmask over ``g.edges`` of the edges kept in trial ``trial_index``."""
    num, den = cfg.p.numerator, cfg.p.denominator
    cut = num * _TWO64
    mask = 0
    for i, u in enumerate(_draws(cfg.seed, trial_index, g.m)):
        if u * den < cut:
            mask |= 1 << i
    return mask


def subgraph_from_mask(g: Graph, mask: int) -> Graph:
    return Graph(g.n, (e for i, e in enumerate(g.edges) if mask >> i & 1), labels=g.labels)


def sample_subgraph(g: Graph, cfg: SampleConfig, trial_index: int) -> Graph:
    return subgraph_from_mask(g, sample_edge_mask(g, cfg, trial_index))


def exact_event_probability(
    g: Graph, p, event: Callable[[Graph], bool], *, max_edges: int = MAX_EXACT_EDGES
) -> Fraction:
    """Exact ``Pr(event(G_p))`` summed over all ``2^m`` edge subsets."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ContractViolation("p must be a probability")
    m = g.m
    if m > max_edges:
        raise ResourceLimitError(f"{m} edges exceeds exhaustive cap {max_edges}")
    by_size = [p ** k * (1 - p) ** (m - k) for k in range(m + 1)]
    total = Fraction(0)
    for mask in range(1 << m):
        if event(subgraph_from_mask(g, mask)):
            total += by_size[mask.bit_count()]
    return total


def _exact_mask_probability(m: int, p: Fraction, event: Callable[[int], bool]) -> Fraction:
    by_size = [p ** k * (1 - p) ** (m - k) for k in range(m + 1)]
    total = Fraction(0)
    for mask in range(1 << m):
        if event(mask):
            total += by_size[mask.bit_count()]
    return total


# -- principal candidates -----------------------------------------------------


def enumerate_principal_candidates(
    ground: OrderedGround, s, x_threshold, *, max_n: int = MAX_CANDIDATE_VERTICES
) -> list[tuple[int, ...]]:
    """Every s-principal set of ``V`` whose average degree in the ground graph
    is at least ``x_threshold``: the k-subsets of ``V_{floor(sk)}`` for all k."""
    g = ground.graph
    if g.n > max_n:
        raise ResourceLimitError(f"n={g.n} exceeds candidate enumeration cap {max_n}")
    s = Fraction(s)
    if s < 1:
        raise ContractViolation("s must be at least 1")
    found = []
    for k in range(1, g.n + 1):
        limit = min((s * k).numerator // (s * k).denominator, g.n)
        for combo in combinations(ground.ordering[:limit], k):
            if at_least(average_degree(g, combo), x_threshold):
                found.append(tuple(sorted(combo)))
    return sorted(found, key=lambda c: (len(c), c))


def candidate_edge_masks(g: Graph, candidates: Sequence[Sequence[int]]) -> list[int]:
    """For each candidate, the bitmask of edges of ``g`` inside it."""
    out = []
    for cand in candidates:
        inside = set(cand)
        out.append(sum(1 << i for i, (u, v) in enumerate(g.edges) if u in inside and v in inside))
    return out


def bad_event(edge_masks: Sequence[int], kept: int) -> bool:
    """Some candidate keeps none of its edges, i.e. is independent in the sample."""
    return any(not (cm & kept) for cm in edge_masks)


def lemma5_exact_probability(g: Graph, w: WeightFunction, s, p, c) -> Fraction:
    """Exact probability that some s-principal set of average degree at least
    ``2 log_{1/p}(e s) + 2c`` in ``g`` is independent in ``G_p``."""
    ground = OrderedGround.from_weights(w)
    x = degree_threshold(p, s, c)
    masks = candidate_edge_masks(g, enumerate_principal_candidates(ground, s, x))
    if g.m > MAX_EXACT_EDGES:
        raise ResourceLimitError(f"{g.m} edges exceeds exhaustive cap {MAX_EXACT_EDGES}")
    return _exact_mask_probability(g.m, Fraction(p), lambda kept: bad_event(masks, kept))


# -- confidence intervals ----------------------------------------------------


def wilson_interval(successes: int, trials: int, confidence: float = DEFAULT_CONFIDENCE) -> tuple[float, float]:
    if trials < 1 or not 0 <= successes <= trials:
        raise ContractViolation("need 0 <= successes <= trials and trials >= 1")
    z = NormalDist().inv_cdf(1 - (1 - confidence) / 2)
    n = trials
    phat = successes / n
    denom = 1 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    lo = 0.0 if successes == 0 else max(0.0, center - half)
    hi = 1.0 if successes == trials else min(1.0, center + half)
    return lo, hi


# -- reports -----------------------------------------------------------------

CSV_COLUMNS = (
    "graph", "n", "m", "t", "p", "c", "threshold_lo", "threshold_hi", "trials",
    "successes", "freq", "ci_lo", "ci_hi", "bound", "verdict",
)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_real(r: Real) -> str:
    return _fmt_rational(r.exact) if r.exact is not None else repr(float(r))


@dataclass(frozen=True)
class McReport:
    """Monte Carlo estimate of an event frequency against a theoretical bound.

    ``bound_side`` is ``"upper"`` when the event probability is claimed to be
    at most ``bound`` and ``"lower"`` when at least.
    """

    event: str
    graph: str
    n: int
    m: int
    t: Fraction | None
    p: Fraction
    c: Real | None
    threshold: Interval | None
    trials_requested: int
    trials: int
    successes: int
    confidence: float
    ci: tuple[float, float]
    bound: Interval | None
    bound_side: str
    verdict: str
    proof_regime: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def frequency(self) -> float:
        return self.successes / self.trials

    def to_json(self) -> dict:
        return {
            "event": self.event,
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "t": None if self.t is None else rational_to_json(self.t),
            "p": rational_to_json(self.p),
            "c": None if self.c is None else self.c.interval().to_json(),
            "threshold": None if self.threshold is None else self.threshold.to_json(),
            "trials_requested": self.trials_requested,
            "trials": self.trials,
            "successes": self.successes,
            "frequency": self.frequency,
            "confidence": self.confidence,
            "ci": list(self.ci),
            "bound": None if self.bound is None else self.bound.to_json(),
            "bound_side": self.bound_side,
            "verdict": self.verdict,
            "proof_regime": self.proof_regime,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def csv_row(self) -> dict[str, str]:
        def f(x):
            return "" if x is None else repr(float(x))

        conservative = None
        if self.bound is not None:
            conservative = self.bound.hi if self.bound_side == "upper" else self.bound.lo
        return {
            "graph": self.graph,
            "n": str(self.n),
            "m": str(self.m),
            "t": "" if self.t is None else _fmt_rational(self.t),
            "p": _fmt_rational(self.p),
            "c": "" if self.c is None else _fmt_real(self.c),
            "threshold_lo": "" if self.threshold is None else f(self.threshold.lo),
            "threshold_hi": "" if self.threshold is None else f(self.threshold.hi),
            "trials": str(self.trials),
            "successes": str(self.successes),
            "freq": repr(self.frequency),
            "ci_lo": repr(self.ci[0]),
            "ci_hi": repr(self.ci[1]),
            "bound": f(conservative),
            "verdict": self.verdict,
        }


def reports_to_csv(reports: Sequence[McReport]) -> str:
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.csv_row())
    return out.getvalue()


def _verdict(ci: tuple[float, float], bound: Interval | None, side: str, vacuous: bool) -> str:
    if bound is None:
        return "no-bound"
    if vacuous:
        return "vacuous"
    if side == "upper":
        return "inconsistent" if ci[0] > bound.hi else "consistent"
    return "inconsistent" if ci[1] < bound.lo else "consistent"


def mc_event(
    g: Graph,
    cfg: SampleConfig,
    event: Callable[[Graph], bool],
    *,
    description: str = "event",
    name: str = "G",
    confidence: float = DEFAULT_CONFIDENCE,
) -> McReport:
    """Frequency of an arbitrary event over ``cfg.trials`` samples, with no bound."""
    hits = sum(1 for r in range(cfg.trials) if event(sample_subgraph(g, cfg, r)))
    ci = wilson_interval(hits, cfg.trials, confidence)
    return McReport(
        event=description, graph=name, n=g.n, m=g.m, t=None, p=cfg.p, c=None,
        threshold=None, trials_requested=cfg.trials, trials=cfg.trials, successes=hits,
        confidence=confidence, ci=ci, bound=None, bound_side="none", verdict="no-bound",
        proof_regime=cfg.p >= Fraction(1, 2),
    )


def mc_lemma5(
    g: Graph,
    w: WeightFunction,
    s,
    p,
    c,
    cfg: SampleConfig,
    *,
    name: str = "G",
    confidence: float = DEFAULT_CONFIDENCE,
) -> McReport:
    """Frequency of the bad event: some s-principal set whose average degree in
    ``g`` is at least ``2 log_{1/p}(e s) + 2c`` is independent in the sample.
    The claimed cap is ``p^c / (1 - p^c)``."""
    p = Fraction(p)
    if cfg.p != p:
        raise ContractViolation("cfg.p and p disagree")
    s = Fraction(s)
    c = Real.coerce(c)
    ground = OrderedGround.from_weights(w)
    x = degree_threshold(p, s, c)
    masks = candidate_edge_masks(g, enumerate_principal_candidates(ground, s, x))
    hits = sum(1 for r in range(cfg.trials) if bad_event(masks, sample_edge_mask(g, cfg, r)))
    q = reals.power(p, c)
    cap = q / (1 - q)
    cap_iv = cap.interval()
    vacuous = cap.compare(1) >= 0
    ci = wilson_interval(hits, cfg.trials, confidence)
    notes = [f"{len(masks)} qualifying principal sets"]
    if vacuous:
        notes.append("vacuous bound: cap >= 1")
    return McReport(
        event=f"some {_fmt_rational(s)}-principal set with average degree >= x is independent",
        graph=name, n=g.n, m=g.m, t=w.total(), p=p, c=c, threshold=x.interval(),
        trials_requested=cfg.trials, trials=cfg.trials, successes=hits,
        confidence=confidence, ci=ci, bound=cap_iv, bound_side="upper",
        verdict=_verdict(ci, cap_iv, "upper", vacuous), proof_regime=p >= Fraction(1, 2),
        notes=tuple(notes),
    )


def mc_theorem(
    g: Graph,
    p,
    c,
    cfg: SampleConfig,
    *,
    corollary: bool = False,
    name: str = "G",
    time_budget_ms: float | None = None,
    confidence: float = DEFAULT_CONFIDENCE,
    max_n: int | None = None,
    max_mis: int | None = None,
) -> McReport:
    """Frequency of ``chi_f(G_p) >= threshold`` against the theorem's bound.

    With ``corollary`` the constant ``c`` is replaced by ``log_{1/p}(e t)``
    and the claimed probability by ``1 - 1/(2t)``. Each sample is solved
    exactly; if one solve takes longer than ``time_budget_ms`` the trial
    count is scaled down and the reduction noted in the report.
    """
    p = Fraction(p)
    if cfg.p != p:
        raise ContractViolation("cfg.p and p disagree")
    caps = {k: v for k, v in (("max_n", max_n), ("max_mis", max_mis)) if v is not None}
    t = solve_chi_f(g, **caps).value
    if corollary:
        c = corollary_c(p, t)
    bounds = theorem_bounds(t, p, c)
    threshold_iv = bounds.threshold.interval()
    cutoff = threshold_iv.hi
    if corollary:
        bound_iv = Interval.point(bounds.corollary_probability)
        vacuous = bounds.corollary_probability <= 0
    else:
        bound_iv = bounds.probability.interval()
        vacuous = bounds.vacuous

    notes = []
    if not bounds.applicable:
        notes.append("theorem inapplicable: t < 2")
    if vacuous:
        notes.append("vacuous bound: claimed probability <= 0")

    target = cfg.trials
    solved: dict[int, Fraction] = {}
    hits = 0
    done = 0
    while done < target:
        kept = sample_edge_mask(g, cfg, done)
        value = solved.get(kept)
        if value is None:
            start = time.perf_counter()
            value = solve_chi_f(subgraph_from_mask(g, kept), **caps).value
            elapsed_ms = (time.perf_counter() - start) * 1000
            solved[kept] = value
            if time_budget_ms is not None and elapsed_ms > time_budget_ms and target == cfg.trials:
                target = max(done + 1, int(cfg.trials * time_budget_ms / elapsed_ms))
                notes.append(
                    f"trials reduced from {cfg.trials} to {target}: a solve took "
                    f"{elapsed_ms:.0f} ms > budget {time_budget_ms} ms"
                )
                log.warning(notes[-1])
        if value >= cutoff:
            hits += 1
        done += 1

    ci = wilson_interval(hits, done, confidence)
    return McReport(
        event="chi_f(G_p) >= threshold (upper enclosure)",
        graph=name, n=g.n, m=g.m, t=t, p=p, c=bounds.c, threshold=threshold_iv,
        trials_requested=cfg.trials, trials=done, successes=hits, confidence=confidence,
        ci=ci, bound=bound_iv, bound_side="lower",
        verdict=_verdict(ci, bound_iv, "lower", vacuous), proof_regime=bounds.proof_regime,
        notes=tuple(notes),
    )


def theorem_exact_probability(g: Graph, p, c, *, corollary: bool = False) -> tuple[Fraction, BoundReport]:
    """Exact ``Pr(chi_f(G_p) >= threshold_hi)`` and the bound report used."""
    p = Fraction(p)
    t = solve_chi_f(g).value
    if corollary:
        c = corollary_c(p, t)
    bounds = theorem_bounds(t, p, c)
    cutoff = bounds.threshold.interval().hi
    prob = exact_event_probability(g, p, lambda h: solve_chi_f(h).value >= cutoff)
    return prob, bounds
