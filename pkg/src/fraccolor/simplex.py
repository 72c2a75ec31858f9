"""Dense tableau simplex over ``fractions.Fraction`` with Bland's rule.

Only the form needed here is supported::

    maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0

so the all-slack basis is feasible and no phase one is required.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FraccolorError

_ZERO = Fraction(0)


class UnboundedError(FraccolorError):
    pass


@dataclass(frozen=True)
class SimplexResult:
    value: Fraction
    x: tuple[Fraction, ...]
    #: Optimal multipliers of the ``A x <= b`` rows (the dual solution).
    y: tuple[Fraction, ...]
    pivots: int


def maximize(
    c: Sequence[Fraction],
    a: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    *,
    max_pivots: int = 1_000_000,
) -> SimplexResult:
    rows, cols = len(a), len(c)
    if len(b) != rows or any(len(r) != cols for r in a):
        raise ValueError("inconsistent LP dimensions")
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")

    width = cols + rows
    # Each tableau row is [coefficients..., rhs]; the objective row holds
    # reduced costs with the current value in the last slot.
    tab = []
    for i in range(rows):
        row = [Fraction(v) for v in a[i]] + [_ZERO] * rows + [Fraction(b[i])]
        row[cols + i] = Fraction(1)
        tab.append(row)
    obj = [-Fraction(v) for v in c] + [_ZERO] * rows + [_ZERO]
    basis = [cols + i for i in range(rows)]

    pivots = 0
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(rows):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise UnboundedError("objective is unbounded")
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise FraccolorError("simplex pivot limit reached")

    x = [_ZERO] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = tab[i][-1]
    y = tuple(obj[cols + i] for i in range(rows))
    return SimplexResult(obj[-1], tuple(x), y, pivots)


def _pivot(tab, obj, r, col):
    prow = tab[r]
    inv = 1 / prow[col]
    if inv != 1:
        for j, v in enumerate(prow):
            if v:
                prow[j] = v * inv
    nz = [j for j, v in enumerate(prow) if v]
    for row in tab + [obj]:
        if row is prow:
            continue
        f = row[col]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
