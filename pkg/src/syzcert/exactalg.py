"""Exact arithmetic substrate: rationals, dense univariate polynomials,
truncated power series and elementary symmetric functions.

Rationals are :class:`fractions.Fraction`, which already keeps the reduced
form with a positive denominator.  Nothing in this package touches floats.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import InputError

Rational = Fraction
Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def format_rational(x: Number) -> str:
    """Text form ``p/q``, with ``/q`` omitted when q == 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise InputError(f"malformed rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise InputError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _as_fraction(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Polynomial:
    """Immutable dense polynomial in one variable ``t``.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are trimmed
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    #: degree reported for the zero polynomial
    ZERO_DEGREE = float("-inf")

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_as_fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, a: Number) -> "Polynomial":
        return cls((a,))

    @classmethod
    def monomial(cls, a: Number, i: int) -> "Polynomial":
        return cls([0] * i + [a])

    @classmethod
    def linear(cls, slope: Number, intercept: Number) -> "Polynomial":
        """``slope * t + intercept``."""
        return cls((intercept, slope))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else self.ZERO_DEGREE

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self._c[i] if i < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial.constant(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-x for x in self._c])

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([x * other for x in self._c])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Polynomial([x / other for x in self._c])

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, t: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * t + a
        return acc

    def to_text(self) -> str:
        """Space-separated coefficients low to high; ``0`` for the zero polynomial."""
        if not self._c:
            return "0"
        return " ".join(format_rational(a) for a in self._c)

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        tokens = text.split()
        if not tokens:
            raise InputError("empty polynomial text")
        return cls(parse_rational(tok) for tok in tokens)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = format_rational(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


T = Polynomial((0, 1))


@lru_cache(maxsize=None)
def binom_poly(shift: int, n: int) -> Polynomial:
    """The binomial coefficient polynomial ``binom(t + shift, n)`` expanded in t."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"binom_poly needs n >= 1, got {n!r}")
    p = Polynomial.constant(1)
    for i in range(n):
        p = p * Polynomial.linear(1, shift - i)
    return p / factorial(n)


def poly_eval_int(p: Polynomial, t: int) -> Fraction:
    return p(t)


def elem_sym(values: Sequence[Number], j: int) -> Fraction:
    """``j``-th elementary symmetric polynomial of ``values`` (sigma_0 = 1)."""
    if j < 0 or j > len(values):
        raise InputError(f"elem_sym index {j} outside 0..{len(values)}")
    # e[i] holds sigma_i of the prefix processed so far
    e: list[Number] = [1] + [0] * j
    for v in values:
        for i in range(j, 0, -1):
            e[i] += e[i - 1] * v
    return Fraction(e[j])


class PowerSeries:
    """Formal power series in ``z`` truncated at a fixed order (inclusive)."""

    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Iterable[Number], order: int):
        if order < 0:
            raise InputError("truncation order must be non-negative")
        c = [_as_fraction(a) for a in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self._c = tuple(c)
        self.order = order

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "PowerSeries":
        return cls(p.coeffs, order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, m: int) -> Fraction:
        return self._c[m]

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.order, self._c))

    def _check(self, other: "PowerSeries") -> int:
        if not isinstance(other, PowerSeries):
            raise TypeError("expected PowerSeries")
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._check(other)
        return PowerSeries([self._c[i] + other._c[i] for i in range(n + 1)], n)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._check(other)
        a, b = self._c, other._c
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                for j in range(n + 1 - i):
                    out[i + j] += a[i] * b[j]
        return PowerSeries(out, n)

    def divide_by_one_minus_z(self) -> "PowerSeries":
        """Multiply by ``1/(1 - z)``, i.e. take prefix sums."""
        out, acc = [], Fraction(0)
        for a in self._c:
            acc += a
            out.append(acc)
        return PowerSeries(out, self.order)

    def __repr__(self) -> str:
        return f"PowerSeries({[format_rational(a) for a in self._c]}, order={self.order})"


def series_quotient_expand(numerator_degrees: Sequence[int], n: int, order: int) -> PowerSeries:
    """Expand ``prod_i (1 - z**d_i) / (1 - z)**(n+1)`` up to ``z**order``.

    The numerator is multiplied in as sparse binomials and the denominator is
    applied as ``n + 1`` prefix-sum passes, so no binomial coefficient is ever
    evaluated here.
    """
    if n < 1:
        raise InputError("n must be positive")
    if order < 0:
        raise InputError("order must be non-negative")
    for d in numerator_degrees:
        if d <= 0:
            raise InputError(f"degrees must be positive, got {d}")
    c = [0] * (order + 1)
    c[0] = 1
    for d in numerator_degrees:
        for m in range(order, d - 1, -1):
            c[m] -= c[m - d]
    s = PowerSeries(c, order)
    for _ in range(n + 1):
        s = s.divide_by_one_minus_z()
    return s


def is_integer_valued(p: Polynomial) -> bool:
    """Whether ``p(m)`` is an integer for every integer ``m``.

    A polynomial of degree d is integer valued iff it takes integer values
    at d + 1 consecutive integers.
    """
    if p.is_zero():
        return True
    return all(p(m).denominator == 1 for m in range(len(p)))
