import csv
import io
import json
import math
import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fraccolor import graph as gr
from fraccolor.errors import ContractViolation, ResourceLimitError
from fraccolor.harness import (
    CSV_COLUMNS,
    SampleConfig,
    candidate_edge_masks,
    enumerate_principal_candidates,
    exact_event_probability,
    lemma5_exact_probability,
    mc_event,
    mc_lemma5,
    mc_theorem,
    reports_to_csv,
    sample_edge_mask,
    sample_subgraph,
    theorem_exact_probability,
    wilson_interval,
)
from fraccolor.independent import is_independent
from fraccolor.lp import WeightFunction, solve_chi_f
from fraccolor.order import OrderedGround, is_principal
from fraccolor.witness import degree_threshold, theorem_bounds

from conftest import random_graphs


class TestSampling:
    def test_deterministic(self):
        g = gr.complete_graph(7)
        cfg = SampleConfig(Fraction(1, 3), seed=99, trials=10)
        first = [sample_edge_mask(g, cfg, r) for r in range(10)]
        assert first == [sample_edge_mask(g, cfg, r) for r in range(10)]
        assert len(set(first)) > 1

    def test_trials_are_independent_of_order(self):
        g = gr.petersen_graph()
        cfg = SampleConfig(Fraction(1, 2), seed=3)
        assert [sample_edge_mask(g, cfg, r) for r in (5, 2, 9)] == [
            sample_edge_mask(g, cfg, r) for r in (5, 2, 9)[::-1]
        ][::-1]

    def test_keeps_vertices(self):
        g = gr.cycle_graph(9)
        h = sample_subgraph(g, SampleConfig(Fraction(1, 2), seed=1), 0)
        assert h.n == 9 and set(h.edges) <= set(g.edges)

    def test_near_one_keeps_everything(self):
        g = gr.complete_graph(5)
        cfg = SampleConfig(1 - Fraction(1, 2 ** 30), seed=7, trials=100)
        full = (1 << g.m) - 1
        assert sum(sample_edge_mask(g, cfg, r) == full for r in range(100)) >= 99

    @settings(max_examples=60, deadline=None)
    @given(st.fractions(0, 1), st.fractions(0, 1), st.integers(0, 2 ** 64 - 1), st.integers(0, 500))
    def test_monotone_coupling(self, a, b, seed, trial):
        a, b = sorted((a, b))
        if a == 0 or b == 1:
            return
        g = gr.complete_graph(8)
        low = sample_edge_mask(g, SampleConfig(a, seed), trial)
        high = sample_edge_mask(g, SampleConfig(b, seed), trial)
        assert low & ~high == 0

    def test_frequency_matches_p(self):
        g = gr.complete_graph(10)
        cfg = SampleConfig(Fraction(3, 10), seed=11)
        kept = sum(sample_edge_mask(g, cfg, r).bit_count() for r in range(400))
        n = 400 * g.m
        assert abs(kept / n - 0.3) < 4 * math.sqrt(0.21 / n)

    def test_rejects_bad_config(self):
        for bad in (dict(p=0), dict(p=1), dict(p=Fraction(1, 2), trials=0), dict(p=Fraction(1, 2), seed=-1)):
            with pytest.raises(ContractViolation):
                SampleConfig(**bad)


class TestExactProbability:
    def test_triangle_edgeless(self):
        g = gr.complete_graph(3)
        assert exact_event_probability(g, Fraction(1, 2), lambda h: h.m == 0) == Fraction(1, 8)
        assert exact_event_probability(g, Fraction(1, 3), lambda h: True) == 1

    def test_edge_count_distribution(self):
        g = gr.cycle_graph(6)
        p = Fraction(2, 7)
        for k in range(7):
            expected = math.comb(6, k) * p ** k * (1 - p) ** (6 - k)
            assert exact_event_probability(g, p, lambda h: h.m == k) == expected

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            exact_event_probability(gr.complete_graph(7), Fraction(1, 2), lambda h: True)


def brute_candidates(ground, s, x):
    g = ground.graph
    out = []
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if is_principal(ground, combo, None, s) and gr.average_degree(g, combo) >= x:
                out.append(combo)
    return sorted(out, key=lambda c: (len(c), c))


class TestCandidates:
    def test_s_one_gives_prefixes(self):
        g = gr.petersen_graph()
        ground = OrderedGround.from_weights(solve_chi_f(g).dual)
        found = enumerate_principal_candidates(ground, 1, 0)
        assert found == [tuple(sorted(ground.ordering[:k])) for k in range(1, 11)]

    def test_matches_brute_force(self):
        rng = random.Random(61)
        for g in [gr.cycle_graph(5), gr.complete_graph(5)] + random_graphs(40, 9, seed=67, min_n=2):
            ground = OrderedGround.from_weights(solve_chi_f(g).dual)
            s = rng.choice([Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2)])
            x = rng.choice([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)])
            assert enumerate_principal_candidates(ground, s, x) == brute_candidates(ground, s, x)

    def test_lemma5_exact_matches_graph_enumeration(self):
        for g in (gr.cycle_graph(5), gr.complete_graph(4), gr.path_graph(5)):
            w = solve_chi_f(g).dual
            ground = OrderedGround.from_weights(w)
            s, p, c = Fraction(3, 2), Fraction(3, 4), Fraction(1, 8)
            x = degree_threshold(p, s, c)
            cands = enumerate_principal_candidates(ground, s, x)
            expected = exact_event_probability(g, p, lambda h: any(is_independent(h, a) for a in cands))
            assert lemma5_exact_probability(g, w, s, p, c) == expected
            assert len(candidate_edge_masks(g, cands)) == len(cands)


class TestWilson:
    @staticmethod
    def quadratic_roots(k, n, z):
        # Wilson endpoints solve (k/n - q)^2 = z^2 q (1 - q) / n.
        phat = k / n
        a = 1 + z * z / n
        b = -(2 * phat + z * z / n)
        return sorted(np.roots([a, b, phat * phat]).real)

    def test_against_quadratic(self):
        z = 2.5758293035489004
        for k, n in [(1, 10), (50, 100), (37, 1000), (999, 1000)]:
            lo, hi = wilson_interval(k, n)
            r_lo, r_hi = self.quadratic_roots(k, n, z)
            assert lo == pytest.approx(r_lo, abs=1e-12)
            assert hi == pytest.approx(r_hi, abs=1e-12)

    def test_extremes(self):
        assert wilson_interval(0, 50)[0] == 0.0
        assert wilson_interval(50, 50)[1] == 1.0
        with pytest.raises(ContractViolation):
            wilson_interval(3, 2)

    def test_coverage(self):
        rng = random.Random(71)
        covered = 0
        for _ in range(100):
            truth = rng.uniform(0.05, 0.95)
            k = sum(rng.random() < truth for _ in range(400))
            lo, hi = wilson_interval(k, 400)
            covered += lo <= truth <= hi
        assert covered >= 95


class TestMonteCarlo:
    def test_lemma5_edgeless(self):
        g = gr.edgeless_graph(5)
        w = WeightFunction.uniform(g)
        report = mc_lemma5(g, w, 2, Fraction(1, 2), 2, SampleConfig(Fraction(1, 2), trials=50))
        assert report.successes == 0 and report.verdict == "consistent"

    def test_lemma5_vacuous(self):
        g = gr.complete_graph(4)
        w = solve_chi_f(g).dual
        report = mc_lemma5(g, w, 2, Fraction(1, 4), Fraction(1, 2), SampleConfig(Fraction(1, 4), trials=20))
        assert report.bound.lo == report.bound.hi == 1
        assert report.verdict == "vacuous"

    def test_lemma5_k8(self):
        g = gr.complete_graph(8)
        w = solve_chi_f(g).dual
        report = mc_lemma5(g, w, 2, Fraction(1, 2), 2, SampleConfig(Fraction(1, 2), seed=5, trials=300))
        assert report.verdict == "consistent"
        assert report.bound.hi == Fraction(1, 3)

    def test_lemma5_rejects_mismatched_p(self):
        g = gr.complete_graph(3)
        with pytest.raises(ContractViolation):
            mc_lemma5(g, WeightFunction.uniform(g), 2, Fraction(1, 2), 1, SampleConfig(Fraction(1, 3)))

    def test_theorem_k2_always_true(self):
        g = gr.complete_graph(2)
        for p in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
            for c in (Fraction(1, 4), 1, 3):
                report = mc_theorem(g, p, c, SampleConfig(p, trials=40))
                assert report.successes == 40

    def test_theorem_vacuous(self):
        g = gr.cycle_graph(5)
        report = mc_theorem(g, Fraction(1, 4), Fraction(1, 2), SampleConfig(Fraction(1, 4), trials=10))
        assert report.verdict == "vacuous"
        assert "t < 2" not in " ".join(report.notes)

    def test_theorem_corollary_k8(self):
        g = gr.complete_graph(8)
        report = mc_theorem(g, Fraction(1, 2), None, SampleConfig(Fraction(1, 2), seed=1, trials=200), corollary=True)
        assert report.bound.lo == Fraction(15, 16)
        assert report.verdict == "consistent"
        assert report.proof_regime

    def test_time_budget_reduces_trials(self):
        g = gr.petersen_graph()
        report = mc_theorem(g, Fraction(1, 2), 1, SampleConfig(Fraction(1, 2), trials=50), time_budget_ms=1e-9)
        assert report.trials < 50 and report.trials_requested == 50
        assert any("trials reduced" in note for note in report.notes)

    def test_event_report(self):
        g = gr.complete_graph(3)
        report = mc_event(g, SampleConfig(Fraction(1, 2), trials=100), lambda h: h.m == 0)
        assert report.verdict == "no-bound" and 0 < report.successes < 40

    def test_csv_and_json(self):
        g = gr.cycle_graph(5)
        reports = [
            mc_theorem(g, Fraction(1, 2), 1, SampleConfig(Fraction(1, 2), seed=s, trials=20)) for s in range(2)
        ]
        text = reports_to_csv(reports)
        rows = list(csv.DictReader(io.StringIO(text)))
        assert tuple(rows[0].keys()) == CSV_COLUMNS and len(rows) == 2
        assert rows[0]["t"] == "5/2" and rows[0]["p"] == "1/2"
        assert float(rows[0]["threshold_lo"]) <= float(rows[0]["threshold_hi"])
        assert json.loads(reports[0].dumps())["trials"] == 20


class TestExactTheorem:
    @pytest.mark.parametrize("graph", [gr.cycle_graph(5), gr.complete_graph(4)], ids=["C5", "K4"])
    def test_grid(self, graph):
        for p, c in ((Fraction(1, 2), 2), (Fraction(3, 4), 1)):
            prob, bounds = theorem_exact_probability(graph, p, c)
            assert prob >= bounds.probability.interval().hi

    def test_corollary_mode(self):
        prob, bounds = theorem_exact_probability(gr.complete_graph(4), Fraction(1, 2), None, corollary=True)
        assert prob >= bounds.corollary_probability == Fraction(7, 8)


class TestKeepProbabilityRegime:
    """The bound's proof needs Pr(A independent) <= p^e(A), which holds for
    keep-probability p only when p >= 1/2. Below that it can fail."""

    def test_small_p_counterexample(self):
        g = gr.complete_graph(6)
        p, c = Fraction(1, 10 ** 6), Fraction(1, 8)
        bounds = theorem_bounds(6, p, c)
        assert bounds.applicable and not bounds.proof_regime
        cutoff = bounds.threshold.interval().hi
        assert 1 < cutoff < 2
        # chi_f is 1 on the empty graph and at least 2 otherwise, so the
        # event is "some edge survives".
        for mask in [0] + [1 << i for i in range(g.m)]:
            h = gr.Graph(6, [e for i, e in enumerate(g.edges) if mask >> i & 1])
            assert (solve_chi_f(h).value >= cutoff) == (h.m > 0)
        prob = 1 - (1 - p) ** g.m
        claimed = bounds.probability.interval().lo
        assert prob < claimed
        # Reading p as the deletion probability instead restores the claim.
        assert 1 - p ** g.m >= claimed
