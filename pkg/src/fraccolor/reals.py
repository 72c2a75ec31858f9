"""Exact decisions about the transcendental quantities in the random-subgraph bounds.

Expressions such as ``log_{1/p}(e t)`` are represented by :class:`Real`,
which can produce a rigorous rational enclosure at any working precision
(outward-rounded interval arithmetic from mpmath). Comparisons against
rationals refine the precision until the enclosure separates the two, so
a ``Real`` that is provably irrational is always compared exactly.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Union

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

#: Working precision (bits) for enclosures written to reports.
DEFAULT_PRECISION = 128
#: Largest precision tried before a comparison is declared undecidable.
MAX_PRECISION = 1 << 14


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, q) -> "Interval":
        q = Fraction(q)
        return cls(q, q)

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> dict:
        return {
            "lo": {"num": str(self.lo.numerator), "den": str(self.lo.denominator)},
            "hi": {"num": str(self.hi.numerator), "den": str(self.hi.denominator)},
            "approx": float(self),
        }

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


def _endpoint(raw) -> Fraction:
    sign, man, exp, _ = raw
    if not man and raw != libmp.fzero:
        raise ArithmeticError("non-finite interval endpoint")
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def _ctx_rational(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / ctx.mpf(q.denominator)


Number = Union["Real", Rational, int]


class Real:
    """A real number given by an evaluation rule in interval arithmetic.

    ``exact`` is set when the value is known to be the rational it holds;
    such values never touch floating point.
    """

    __slots__ = ("_rule", "exact")

    def __init__(self, rule: Callable, exact: Fraction | None = None):
        self._rule = rule
        self.exact = exact

    @classmethod
    def rational(cls, q) -> "Real":
        q = Fraction(q)
        return cls(lambda ctx: _ctx_rational(ctx, q), exact=q)

    @classmethod
    def coerce(cls, x: Number) -> "Real":
        return x if isinstance(x, Real) else cls.rational(x)

    def _eval(self, ctx):
        return self._rule(ctx)

    def interval(self, prec: int = DEFAULT_PRECISION) -> Interval:
        if self.exact is not None:
            return Interval.point(self.exact)
        ctx = MPIntervalContext()
        ctx.prec = prec
        a, b = self._eval(ctx)._mpi_
        return Interval(_endpoint(a), _endpoint(b))

    def compare(self, q) -> int:
        """Sign of ``self - q``, decided exactly by refining the enclosure."""
        q = Fraction(q)
        if self.exact is not None:
            return (self.exact > q) - (self.exact < q)
        prec = 64
        while prec <= MAX_PRECISION:
            iv = self.interval(prec)
            if iv.lo > q:
                return 1
            if iv.hi < q:
                return -1
            if iv.lo == iv.hi == q:
                return 0
            prec *= 2
        raise ArithmeticError(f"cannot separate value from {q} at {MAX_PRECISION} bits")

    def floor(self) -> int:
        if self.exact is not None:
            return self.exact.numerator // self.exact.denominator
        iv = self.interval(64)
        k = iv.lo.numerator // iv.lo.denominator
        # The floor is k or larger; step up while the value reaches k + 1.
        while self.compare(k + 1) >= 0:
            k += 1
        return k

    def __float__(self) -> float:
        return float(self.exact) if self.exact is not None else float(self.interval(64))

    def __repr__(self):
        if self.exact is not None:
            return f"Real({self.exact})"
        iv = self.interval(64)
        return f"Real(~{float(iv):.17g})"

    # -- arithmetic ----------------------------------------------------------

    def _binary(self, other: Number, op, swap=False) -> "Real":
        if not isinstance(other, (Real, Rational, int)):
            return NotImplemented
        other = Real.coerce(other)
        left, right = (other, self) if swap else (self, other)
        exact = None
        if left.exact is not None and right.exact is not None:
            exact = op(left.exact, right.exact)
        return Real(lambda ctx: op(left._eval(ctx), right._eval(ctx)), exact=exact)

    def __add__(self, other):
        return self._binary(other, operator.add)

    def __radd__(self, other):
        return self._binary(other, operator.add, swap=True)

    def __sub__(self, other):
        return self._binary(other, operator.sub)

    def __rsub__(self, other):
        return self._binary(other, operator.sub, swap=True)

    def __mul__(self, other):
        return self._binary(other, operator.mul)

    def __rmul__(self, other):
        return self._binary(other, operator.mul, swap=True)

    def __truediv__(self, other):
        return self._binary(other, operator.truediv)

    def __rtruediv__(self, other):
        return self._binary(other, operator.truediv, swap=True)

    def __neg__(self):
        return Real.rational(0) - self

    def __ge__(self, other):
        return self.compare(other) >= 0 if not isinstance(other, Real) else (self - other).compare(0) >= 0

    def __gt__(self, other):
        return self.compare(other) > 0 if not isinstance(other, Real) else (self - other).compare(0) > 0

    def __le__(self, other):
        return self.compare(other) <= 0 if not isinstance(other, Real) else (self - other).compare(0) <= 0

    def __lt__(self, other):
        return self.compare(other) < 0 if not isinstance(other, Real) else (self - other).compare(0) < 0


def ln(x: Number) -> Real:
    x = Real.coerce(x)
    if x.exact == 1:
        return Real.rational(0)
    return Real(lambda ctx: ctx.log(x._eval(ctx)))


def exp(x: Number) -> Real:
    x = Real.coerce(x)
    if x.exact == 0:
        return Real.rational(1)
    return Real(lambda ctx: ctx.exp(x._eval(ctx)))


E = exp(1)


def integer_root(n: int, k: int) -> int | None:
    """``r`` with ``r**k == n`` for ``n >= 0``, or ``None`` if no such integer exists."""
    if n < 2:
        return n
    # Newton iteration on integers, started above the root.
    r = 1 << -(-n.bit_length() // k)
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    return r if r ** k == n else None


def rational_power(base: Fraction, exponent: Fraction) -> Fraction | None:
    """``base ** exponent`` when it is rational, else ``None``."""
    base, exponent = Fraction(base), Fraction(exponent)
    if base <= 0:
        raise ValueError("base must be positive")
    a, b = exponent.numerator, exponent.denominator
    num = integer_root(base.numerator, b)
    den = integer_root(base.denominator, b)
    if num is None or den is None:
        return None
    return Fraction(num, den) ** a


def power(base: Fraction, exponent: Number) -> Real:
    """``base ** exponent`` for positive rational ``base``."""
    base = Fraction(base)
    exponent = Real.coerce(exponent)
    if exponent.exact is not None:
        q = rational_power(base, exponent.exact)
        if q is not None:
            return Real.rational(q)
    return exp(exponent * ln(base))


def log_base_inverse(p: Fraction, z: Number) -> Real:
    """``log_{1/p}(z)`` for rational ``p`` in (0, 1)."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    return ln(z) / ln(1 / p)
