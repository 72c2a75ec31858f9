"""Command-line front end.

Exit codes: 0 success, 1 verification failure or inconsistent verdict,
2 usage error, 3 resource cap exceeded. Machine output goes to stdout,
logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import re
import sys
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from . import graph as gr
from .dimacs import format_dimacs, read_dimacs
from .errors import ContractViolation, FraccolorError, ResourceLimitError
from .harness import SampleConfig, mc_lemma5, mc_theorem, reports_to_csv, sample_subgraph
from .independent import MAX_ENUMERATION_VERTICES, MAX_MAXIMAL_SETS, maximal_independent_sets
from .lp import ChiFCertificate, certificate_problems, rational_to_json, solve_chi_f
from .order import OrderedGround, is_sparse, is_sparse_bruteforce, sparse_weight_bound_check
from .witness import (
    extract_heavy_independent,
    find_dense_principal_subset,
    lemma6_bound,
    lemma6_weight_check,
    theorem_bounds,
)

log = logging.getLogger("fraccolor")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an integer or 'num/den', got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator") from None


def graph_from_spec(spec: str) -> gr.Graph:
    """Build a graph from ``complete:n``, ``cycle:n``, ``kneser:n:k``,
    ``mycielski:<spec-or-file>``, ``edgeless:n``, ``path:n``, ``petersen``
    or ``grotzsch``."""
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []

    def ints(count):
        if len(args) != count or not all(a.lstrip("-").isdigit() for a in args):
            raise UsageError(f"malformed generator spec {spec!r}")
        return [int(a) for a in args]

    builders = {
        "complete": gr.complete_graph,
        "cycle": gr.cycle_graph,
        "edgeless": gr.edgeless_graph,
        "path": gr.path_graph,
    }
    if kind in builders:
        return builders[kind](*ints(1))
    if kind == "kneser":
        return gr.kneser_graph(*ints(2))
    if kind == "petersen" and not rest:
        return gr.petersen_graph()
    if kind == "grotzsch" and not rest:
        return gr.grotzsch_graph()
    if kind == "mycielski" and rest:
        inner = read_dimacs(rest) if Path(rest).is_file() else graph_from_spec(rest)
        return gr.mycielskian(inner)
    raise UsageError(f"unknown generator spec {spec!r}")


def _load_graph(args) -> tuple[gr.Graph, str]:
    if args.input:
        g = read_dimacs(args.input)
        name = Path(args.input).stem
    elif args.gen:
        g = graph_from_spec(args.gen)
        name = args.gen
    else:
        raise UsageError("one of --input or --gen is required")
    if g.n > args.max_n:
        raise ResourceLimitError(f"n={g.n} exceeds --max-n {args.max_n}")
    return g, name


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands -------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = args.spec or args.gen
    if not spec:
        raise UsageError("gen needs a generator spec")
    g = graph_from_spec(spec)
    text = format_dimacs(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        _emit(text)
    return EXIT_OK


def cmd_chif(args) -> int:
    g, _ = _load_graph(args)
    cert = solve_chi_f(g, max_n=args.max_n, max_mis=args.max_mis)
    problems = certificate_problems(g, cert)
    out = cert.to_json()
    out["verified"] = not problems
    _emit(json.dumps(out, indent=2, sort_keys=True))
    for p in problems:
        log.error("certificate check failed: %s", p)
    return EXIT_OK if not problems else EXIT_FAIL


def _lemma_suite(g, cert, s, trials, seed) -> list[dict]:
    """Run the sparse-set and heavy-independent-set checks on ``g``."""
    w = cert.dual
    ground = OrderedGround.from_weights(w)
    rng = random.Random(seed)
    verts = list(g.vertices())
    s_values = sorted({Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3), s})

    if g.n <= 12:
        xs = [c for k in range(g.n + 1) for c in combinations(verts, k)]
    else:
        xs = [tuple(v for v in verts if rng.random() < 0.3) for _ in range(trials)]
    equiv = {"name": "sparse characterization equivalence", "instances": 0, "violations": 0}
    weight = {"name": "sparse sets are light", "instances": 0, "violations": 0}
    for x in xs:
        if len(x) > 20:
            continue
        for sv in s_values:
            fast = is_sparse(ground, x, None, sv).verdict
            equiv["instances"] += 1
            if fast != is_sparse_bruteforce(ground, x, None, sv):
                equiv["violations"] += 1
            if fast:
                holds, _, _ = sparse_weight_bound_check(ground, w, x, None, sv)
                weight["instances"] += 1
                weight["violations"] += not holds

    lemma6 = {"name": "heavy independent set in principal-free sets", "instances": 0,
              "violations": 0, "skipped_hypothesis": 0}
    x_values = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
    cfg = SampleConfig(Fraction(1, 2), seed=seed, trials=max(trials, 1))
    for r in range(trials):
        h = sample_subgraph(g, cfg, r)
        family = maximal_independent_sets(h).sets
        a = family[rng.randrange(len(family))]
        if len(a) > 16:
            continue
        x = x_values[r % len(x_values)]
        if find_dense_principal_subset(g, ground, a, s, x) is not None:
            lemma6["skipped_hypothesis"] += 1
            continue
        lemma6["instances"] += 1
        chosen = extract_heavy_independent(g, ground, w, a, x, s)
        holds, _, _ = lemma6_weight_check(g, ground, w, a, x, s)
        if not holds or w.of(chosen) < lemma6_bound(w, a, x, s):
            lemma6["violations"] += 1

    checks = [equiv, weight, lemma6]
    for c in checks:
        c["passed"] = c["violations"] == 0
    return checks


def cmd_verify_lemmas(args) -> int:
    g, name = _load_graph(args)
    if args.certificate:
        cert = ChiFCertificate.from_json(json.loads(Path(args.certificate).read_text()))
    else:
        cert = solve_chi_f(g, max_n=args.max_n, max_mis=args.max_mis)
    problems = certificate_problems(g, cert)
    report = {
        "graph": name,
        "n": g.n,
        "m": g.m,
        "t": rational_to_json(cert.value),
        "certificate_problems": problems,
    }
    if problems:
        report["checks"] = []
        report["passed"] = False
        _emit(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_FAIL
    s = args.s if args.s is not None else max(cert.value, Fraction(1))
    if s < 1:
        raise UsageError("--s must be at least 1")
    report["s"] = rational_to_json(s)
    report["checks"] = _lemma_suite(g, cert, s, args.trials, args.seed)
    report["passed"] = all(c["passed"] for c in report["checks"])
    _emit(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_mc(args) -> int:
    g, name = _load_graph(args)
    if args.p is None:
        raise UsageError("--p is required")
    if not 0 < args.p < 1:
        raise UsageError("--p must lie strictly between 0 and 1")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.c is None and not (args.mode == "theorem" and args.corollary):
        raise UsageError("--c is required unless --corollary is given")
    if args.c is not None and args.c <= 0:
        raise UsageError("--c must be positive")
    cfg = SampleConfig(args.p, seed=args.seed, trials=args.trials)
    if args.mode == "theorem":
        report = mc_theorem(
            g, args.p, args.c, cfg, corollary=args.corollary, name=name,
            time_budget_ms=args.time_budget_ms, max_n=args.max_n, max_mis=args.max_mis,
        )
    else:
        if args.corollary:
            raise UsageError("--corollary applies to theorem mode only")
        cert = solve_chi_f(g, max_n=args.max_n, max_mis=args.max_mis)
        s = args.s if args.s is not None else max(cert.value, Fraction(1))
        report = mc_lemma5(g, cert.dual, s, args.p, args.c, cfg, name=name)
    if args.format == "csv":
        _emit(reports_to_csv([report]))
    else:
        _emit(report.dumps())
    return EXIT_FAIL if report.verdict == "inconsistent" else EXIT_OK


def cmd_bounds(args) -> int:
    if args.t is None or args.p is None:
        raise UsageError("--t and --p are required")
    if not 0 < args.p < 1:
        raise UsageError("--p must lie strictly between 0 and 1")
    if args.t < 1:
        raise UsageError("--t must be at least 1")
    c = args.c if args.c is not None else Fraction(1)
    if c <= 0:
        raise UsageError("--c must be positive")
    report = theorem_bounds(args.t, args.p, c)
    if not report.applicable:
        log.warning("theorem inapplicable: t < 2")
    _emit(report.dumps())
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="DIMACS edge file")
    src.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. cycle:5")
    common.add_argument("--p", type=rational)
    common.add_argument("--c", type=rational)
    common.add_argument("--s", type=rational)
    common.add_argument("--t", type=rational)
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "dimacs"), default="json")
    common.add_argument("--max-n", type=int, default=MAX_ENUMERATION_VERTICES)
    common.add_argument("--max-mis", type=int, default=MAX_MAXIMAL_SETS)
    common.add_argument("--time-budget-ms", type=float, default=None)
    common.add_argument("--corollary", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="fraccolor",
        description="Exact fractional chromatic numbers and random-subgraph bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph as DIMACS")
    p.add_argument("spec", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chif", parents=[common], help="solve chi_f with a certificate")
    p.set_defaults(func=cmd_chif)

    p = sub.add_parser("verify-lemmas", parents=[common], help="run the lemma checks on a graph")
    p.add_argument("--certificate", metavar="FILE", help="check this certificate instead of solving")
    p.set_defaults(func=cmd_verify_lemmas, trials=200)

    p = sub.add_parser("mc", parents=[common], help="Monte Carlo check of a bound")
    p.add_argument("mode", choices=("theorem", "lemma5"))
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("bounds", parents=[common], help="print the closed-form bounds")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    log.propagate = False
    try:
        return _dispatch(parser, args)
    finally:
        log.removeHandler(handler)


def _dispatch(parser: argparse.ArgumentParser, args) -> int:
    for cap in ("max_n", "max_mis", "trials"):
        if getattr(args, cap) < 0 or (cap != "trials" and getattr(args, cap) == 0):
            parser.error(f"--{cap.replace('_', '-')} must be positive")
    if args.seed < 0:
        parser.error("--seed must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ResourceLimitError as exc:
        log.error("resource cap exceeded: %s", exc)
        return EXIT_RESOURCE
    except ContractViolation as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except FraccolorError as exc:
        log.error("%s", exc)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
