"""Hilbert polynomials of complete intersections in projective space.

For a multidegree ``(d_1, ..., d_k)`` in P^n the Hilbert polynomial of
``O_X(1)`` is

    F_n(t; d) = sum over subsets I of {1..k} of (-1)^|I| binom(t + n - d_I, n)

with ``d_I`` the sum of the degrees indexed by I.  This module computes it by
inclusion-exclusion, by the degree-lowering recurrence, and coefficientwise
through elementary symmetric functions, and cross-checks all three against
the Hilbert series of the coordinate ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Optional, Sequence

from .errors import InputError
from .exactalg import Polynomial, binom_poly, elem_sym, series_quotient_expand


@dataclass(frozen=True)
class MultiDegree:
    """Ambient dimension ``n`` and the sorted degrees of the hypersurfaces.

    ``k == n`` is accepted (a zero-dimensional intersection); the enumeration
    of varieties only produces ``k < n``.
    """

    n: int
    degrees: tuple[int, ...] = ()
    fano_cy: bool = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"n must be a positive integer, got {self.n!r}")
        degs = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 for d in degs):
            raise InputError(f"degrees must be positive, got {list(self.degrees)}")
        if len(degs) > self.n:
            raise InputError(f"need n >= k, got n={self.n}, k={len(degs)}")
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "fano_cy", sum(degs) <= self.n + 1)

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.n - self.k

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return f"({self.n}; {','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class CoefficientTable:
    n: int
    degrees: tuple[int, ...]
    s_values: tuple[Fraction, ...]


def _subset_sums(degrees: Sequence[int]) -> dict[int, int]:
    """Signed count ``sum (-1)^|I|`` of subsets I grouped by ``d_I``."""
    k = len(degrees)
    counts: dict[int, int] = {}
    for mask in range(1 << k):
        s, size = 0, 0
        for i in range(k):
            if mask >> i & 1:
                s += degrees[i]
                size += 1
        counts[s] = counts.get(s, 0) + (-1 if size & 1 else 1)
    return counts


@lru_cache(maxsize=None)
def _f_raw(n: int, degrees: tuple[int, ...]) -> Polynomial:
    # no n > k requirement: the lemmas use F_{n-1} with up to n degrees
    out = Polynomial()
    for s, c in sorted(_subset_sums(degrees).items()):
        if c:
            out = out + binom_poly(n - s, n) * c
    return out


def f_poly(md: MultiDegree) -> Polynomial:
    """F_n(t; d_1, ..., d_k) by inclusion-exclusion over all 2^k subsets."""
    return _f_raw(md.n, md.degrees)


def f_poly_raw(n: int, degrees: Sequence[int]) -> Polynomial:
    """Same as :func:`f_poly` without the ``n > k`` restriction."""
    if n < 1:
        raise InputError("n must be positive")
    return _f_raw(n, tuple(sorted(degrees)))


@lru_cache(maxsize=None)
def _f_rec(n: int, degrees: tuple[int, ...]) -> Polynomial:
    k = len(degrees)
    if k == 0:
        return binom_poly(n, n)
    if n == 1:
        # sum_I (-1)^|I| (t + 1 - d_I) is d_1 for k = 1 and vanishes for k >= 2
        return Polynomial.constant(degrees[0]) if k == 1 else Polynomial()
    rest = Polynomial.linear(1, n - sum(degrees)) * _f_rec(n - 1, degrees)
    for i, d in enumerate(degrees):
        rest = rest + _f_rec(n - 1, degrees[:i] + degrees[i + 1:]) * d
    return rest / n


def f_poly_rec(md: MultiDegree) -> Polynomial:
    """F_n via the recurrence in n, memoized on ``(n, sorted degrees)``."""
    return _f_rec(md.n, md.degrees)


def s_coeff(md: MultiDegree, j: int) -> Fraction:
    """``n!`` times the coefficient of ``t^(n-j)`` in F_n, via elementary
    symmetric functions of the shifted roots ``1 - d_I, ..., n - d_I``."""
    return _s_raw(md.n, md.degrees, j)


def _s_raw(n: int, degrees: tuple[int, ...], j: int) -> Fraction:
    if not 0 <= j <= n:
        raise InputError(f"j must lie in 0..{n}, got {j}")
    total = Fraction(0)
    for s, c in _subset_sums(degrees).items():
        if c:
            total += c * elem_sym([i - s for i in range(1, n + 1)], j)
    return total


def coefficient_table(md: MultiDegree) -> CoefficientTable:
    return CoefficientTable(md.n, md.degrees, tuple(s_coeff(md, j) for j in range(md.n + 1)))


def _require_lemma_range(md: MultiDegree) -> None:
    if md.n < 2 or md.k == 0:
        raise InputError(f"lemma checks need n >= 2 and k >= 1, got {md}")


def lemma31_check(md: MultiDegree) -> bool:
    """Check ``sum_I (-1)^|I| d_{k minus I} binom(t+n-1-d_I, n-1)
    == sum_i d_i F_{n-1}(t; d without d_i)`` as polynomials."""
    _require_lemma_range(md)
    n, degs = md.n, md.degrees
    total = sum(degs)
    lhs = Polynomial()
    for mask in range(1 << len(degs)):
        d_in = sum(d for i, d in enumerate(degs) if mask >> i & 1)
        sign = -1 if bin(mask).count("1") & 1 else 1
        lhs = lhs + binom_poly(n - 1 - d_in, n - 1) * (sign * (total - d_in))
    rhs = Polynomial()
    for i, d in enumerate(degs):
        rhs = rhs + _f_raw(n - 1, degs[:i] + degs[i + 1:]) * d
    return lhs == rhs


def lemma32_check(md: MultiDegree) -> bool:
    """Check ``n F_n = (t + n - sum d) F_{n-1} + sum_i d_i F_{n-1}(d without d_i)``
    using only inclusion-exclusion outputs."""
    _require_lemma_range(md)
    n, degs = md.n, md.degrees
    rhs = Polynomial.linear(1, n - sum(degs)) * _f_raw(n - 1, degs)
    for i, d in enumerate(degs):
        rhs = rhs + _f_raw(n - 1, degs[:i] + degs[i + 1:]) * d
    return _f_raw(n, degs) * n == rhs


def parity_check(md: MultiDegree) -> bool:
    """When ``sum d = n + 1``: S_j vanishes for k + j odd and equals twice
    S_j of the multidegree with the last degree dropped for k + j even."""
    if md.k == 0 or md.degree_sum != md.n + 1:
        raise InputError(f"parity check needs k >= 1 and sum of degrees = n + 1, got {md}")
    shorter = md.degrees[:-1]
    for j in range(md.n + 1):
        s = s_coeff(md, j)
        if (md.k + j) % 2:
            if s != 0:
                return False
        elif s != 2 * _s_raw(md.n, shorter, j):
            return False
    return True


def nonneg_check(md: MultiDegree) -> tuple[bool, Optional[tuple[int, Fraction]]]:
    """Whether every coefficient of F_n is >= 0.

    Returns ``(True, None)`` or ``(False, (index, coefficient))`` for the
    lowest-index negative coefficient.  Works outside the Fano/CY range too.
    """
    for i, a in enumerate(f_poly(md)):
        if a < 0:
            return False, (i, a)
    return True, None


def hilbert_function_start(md: MultiDegree) -> int:
    """First ``m >= 0`` from which the Hilbert function of the coordinate ring
    is guaranteed to equal F_n(m).

    ``binom(m + n - d_I, n)`` as a polynomial agrees with the true binomial
    count once ``m + n - d_I >= 0``; the worst subset is I = all degrees.
    """
    return max(0, md.degree_sum - md.n)


def oracle_mismatches(md: MultiDegree, t_max: int, t_min: int = 0) -> list[tuple[int, Fraction, Fraction]]:
    """List ``(m, F_n(m), series coefficient)`` for every disagreement with
    ``t_min <= m <= t_max``."""
    p = f_poly(md)
    series = series_quotient_expand(md.degrees, md.n, t_max)
    return [(m, p(m), series[m]) for m in range(t_min, t_max + 1) if p(m) != series[m]]


def oracle_match(md: MultiDegree, t_max: int, t_min: Optional[int] = None) -> bool:
    """Compare F_n(m) with the Hilbert series of the complete intersection.

    By default the comparison starts at :func:`hilbert_function_start`, since
    below it the Hilbert function and Hilbert polynomial legitimately differ
    (for ``sum d = n + 1`` only at m = 0, where F_n(0) = chi(O_X)).  Pass
    ``t_min=0`` for the unconditional comparison.
    """
    start = hilbert_function_start(md) if t_min is None else t_min
    if t_max - start < md.dim:
        raise InputError(f"t_max={t_max} leaves too few points to pin a degree-{md.dim} polynomial")
    return not oracle_mismatches(md, t_max, start)


def _multisets(k: int, total_max: int, lo: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for d in range(lo, total_max // k + 1):
        for tail in _multisets(k - 1, total_max - d, d):
            yield (d,) + tail


def enumerate_multidegrees(n_max: int) -> Iterator[MultiDegree]:
    """Every Fano/CY multidegree with ``n <= n_max``, ordered by (n, k, degrees)."""
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        for k in range(n):
            for degs in _multisets(k, n + 1, 1):
                yield MultiDegree(n, degs)


def leading_law(md: MultiDegree) -> tuple[int, Fraction]:
    """Expected ``(degree, leading coefficient)`` of F_n for k < n."""
    return md.dim, Fraction(prod(md.degrees), factorial(md.dim))
