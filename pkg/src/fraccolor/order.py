"""Weight-ordered prefixes and the s-principal / s-sparse predicates.

Every vertex set is ranked by a fixed ground ordering (normally the
non-increasing weight order of a :class:`~fraccolor.lp.WeightFunction`).
For a host set ``Y``, ``Y_k`` denotes its first ``k`` elements in that
order and ``Y_s = Y_floor(s)`` for real ``s``.

A nonempty ``X`` inside ``Y`` is *s-principal* when ``X`` lies in
``Y_{s|X|}``, and *s-sparse* when no nonempty subset of ``X`` is
s-principal. The latter is tested through the prefix-count criterion
``|Y_k & X| < k/s`` for all ``k``; :func:`is_sparse_bruteforce` checks the
definition directly and serves as its oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContractViolation, ResourceLimitError
from .graph import Graph, vertex_set
from .lp import WeightFunction
from .reals import Real

#: Size cap on ``x`` for the subset-enumerating oracle.
BRUTEFORCE_MAX = 20


class OrderedGround:
    """A graph's vertices in a fixed order, with 1-based ranks."""

    __slots__ = ("graph", "ordering", "rank")

    def __init__(self, graph: Graph, ordering: Sequence[int]):
        ordering = tuple(ordering)
        if sorted(ordering) != list(range(graph.n)):
            raise ContractViolation("ordering must be a permutation of the vertices")
        self.graph = graph
        self.ordering = ordering
        rank = [0] * graph.n
        for pos, v in enumerate(ordering, 1):
            rank[v] = pos
        self.rank = tuple(rank)

    @classmethod
    def from_weights(cls, w: WeightFunction) -> "OrderedGround":
        return cls(w.graph, w.ordering)

    def ranked(self, a: Iterable[int] | None = None) -> tuple[int, ...]:
        """Elements of ``a`` (default: all vertices) sorted by rank."""
        if a is None:
            return self.ordering
        return tuple(sorted(vertex_set(self.graph, a), key=self.rank.__getitem__))

    def __repr__(self):
        return f"OrderedGround({list(self.ordering)})"


def _as_rational_s(s) -> Fraction:
    s = Fraction(s)
    if s < 1:
        raise ContractViolation(f"s must be at least 1, got {s}")
    return s


def _floor(length) -> int:
    if isinstance(length, Real):
        return length.floor()
    q = Fraction(length)
    return q.numerator // q.denominator


def _host(ground: OrderedGround, x, y) -> tuple[tuple[int, ...], tuple[int, ...]]:
    ys = ground.ranked(y)
    xs = ground.ranked(x)
    if not set(xs) <= set(ys):
        raise ContractViolation("x must be a subset of the host set y")
    return xs, ys


def prefix(ground: OrderedGround, y: Iterable[int] | None, length) -> tuple[int, ...]:
    """First ``floor(length)`` elements of ``y`` in ground order (empty below 1)."""
    ys = ground.ranked(y)
    k = _floor(length)
    if k < 1:
        return ()
    return ys[:k]


def is_principal(ground: OrderedGround, x: Iterable[int], y: Iterable[int] | None, s) -> bool:
    s = _as_rational_s(s)
    xs, ys = _host(ground, x, y)
    if not xs:
        raise ContractViolation("principal sets are nonempty by definition")
    head = set(prefix(ground, ys, s * len(xs)))
    return all(v in head for v in xs)


@dataclass(frozen=True)
class SparseReport:
    """Outcome of the prefix-count test.

    When ``verdict`` is false, ``witness_k`` is the first prefix length with
    ``|Y_k & X| >= k/s`` and ``count`` is that intersection size.
    """

    verdict: bool
    s: Fraction
    witness_k: int | None = None
    count: int | None = None

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {
            "sparse": self.verdict,
            "s": {"num": str(self.s.numerator), "den": str(self.s.denominator)},
            "witness_k": self.witness_k,
            "count": self.count,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def is_sparse(ground: OrderedGround, x: Iterable[int], y: Iterable[int] | None, s) -> SparseReport:
    s = _as_rational_s(s)
    xs, ys = _host(ground, x, y)
    members = set(xs)
    count = 0
    for k, v in enumerate(ys, 1):
        if v in members:
            count += 1
        if count * s >= k:
            return SparseReport(False, s, k, count)
    return SparseReport(True, s)


def is_sparse_bruteforce(ground: OrderedGround, x: Iterable[int], y: Iterable[int] | None, s) -> bool:
    """Definition check: no nonempty subset of ``x`` is s-principal in ``y``."""
    s = _as_rational_s(s)
    xs, ys = _host(ground, x, y)
    if len(xs) > BRUTEFORCE_MAX:
        raise ResourceLimitError(f"|x|={len(xs)} exceeds brute-force cap {BRUTEFORCE_MAX}")
    pos_in_y = {v: i for i, v in enumerate(ys, 1)}
    # xs is rank-sorted, so the last chosen element has the largest position.
    positions = [pos_in_y[v] for v in xs]
    for subset in range(1, 1 << len(xs)):
        size = subset.bit_count()
        last = positions[subset.bit_length() - 1]
        cutoff = s * size
        if last <= cutoff.numerator // cutoff.denominator:
            return False
    return True


def _check_order_matches(ground: OrderedGround, w: WeightFunction, ys) -> None:
    for a, b in zip(ys, ys[1:]):
        if w[a] < w[b]:
            raise ContractViolation("ground order is not non-increasing in the given weights")


def sparse_weight_bound_check(
    ground: OrderedGround, w: WeightFunction, x: Iterable[int], y: Iterable[int] | None, s
) -> tuple[bool, Fraction, Fraction]:
    """Compare ``w(x)`` with ``w(y)/s`` for an s-sparse ``x``.

    Returns ``(holds, w(x), w(y)/s)``; ``holds`` is always true for a
    ground order that is non-increasing in ``w``.

    Raises
    ------
    ContractViolation
        If ``x`` is not s-sparse in ``y`` or the order disagrees with ``w``.
    """
    s = _as_rational_s(s)
    xs, ys = _host(ground, x, y)
    _check_order_matches(ground, w, ys)
    report = is_sparse(ground, xs, ys, s)
    if not report:
        raise ContractViolation(f"x is not {s}-sparse in y (prefix k={report.witness_k})")
    lhs = w.of(xs)
    rhs = w.of(ys) / s
    return lhs <= rhs, lhs, rhs
