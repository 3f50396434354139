"""Hilbert-polynomial criterion for stability of syzygy bundles.

Given the Hilbert polynomial ``P`` of an ample generator H on a variety of
Picard number one, and ``L = H^ell``, the syzygy bundle M_L has rank
``P(ell) - 1`` and c_1 = -ell H.  A wedge power of M_L twisted by H^k can only
have non-positive slope when ``k <= ell r / (P(ell) - 1)``; stability then
reduces to the finite table of inequalities

    k (P(ell) - 1) / ell  >  P(k) - 1      for 1 <= k < ell,

which :func:`destabilizing_search` records with exact margins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import InputError, PreconditionError
from .exactalg import Number, Polynomial


class Verdict(str, Enum):
    PASS_STRICT = "PASS_STRICT"
    PASS_WEAK_AT_K1 = "PASS_WEAK_AT_K1"
    FAIL = "FAIL"


WEAK_AT_K1_NOTE = (
    "equality at k=1 forces ell=2 and a reducible general member of |L|; "
    "excluded geometrically by Bertini for globally generated ample L, "
    "which is not checked arithmetically"
)


@dataclass(frozen=True)
class CriterionReport:
    p1: Fraction
    neg_coeff_indices: tuple[int, ...]
    a1_negative: bool
    condition3: bool
    condition3prime: bool


@dataclass(frozen=True)
class CertificateRow:
    k: int
    lhs: Fraction
    rhs: Fraction

    @property
    def margin(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def strict(self) -> bool:
        return self.lhs > self.rhs


@dataclass(frozen=True)
class StabilityCertificate:
    ell: int
    h0L: Fraction
    rows: tuple[CertificateRow, ...]
    verdict: Verdict
    picard_rank_one: bool = False
    minus_K_nef: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def rank(self) -> Fraction:
        return self.h0L - 1

    @property
    def c1_ML(self) -> int:
        return -self.ell


@dataclass(frozen=True)
class MonotoneResult:
    table: tuple[tuple[int, Fraction], ...]
    ok: bool
    weak_at_k1: bool


def _require_degree(p: Polynomial, what: str) -> None:
    if p.degree < 2:
        raise InputError(f"{what} needs a polynomial of degree >= 2, got degree {p.degree}")


def check_condition3(p: Polynomial) -> CriterionReport:
    """Evaluate ``P(1) > 0`` with ``a_i >= 0`` for i >= 2, and the stronger
    all-coefficients-non-negative variant."""
    _require_degree(p, "check_condition3")
    if p.leading <= 0:
        raise InputError(f"leading coefficient must be positive, got {p.leading}")
    p1 = p(1)
    neg = tuple(i for i in range(2, len(p)) if p[i] < 0)
    cond3 = p1 > 0 and not neg
    return CriterionReport(
        p1=p1,
        neg_coeff_indices=neg,
        a1_negative=p[1] < 0,
        condition3=cond3,
        condition3prime=cond3 and p[1] >= 0 and p[0] >= 0,
    )


def eq1_terms(p: Polynomial) -> tuple[Fraction, Fraction]:
    """``(sum_{i>=2} a_i (2^i - 2), a_0 - 1)``."""
    lhs = sum((p[i] * (2**i - 2) for i in range(2, len(p))), Fraction(0))
    return lhs, p[0] - 1


def eq1_check(p: Polynomial) -> bool:
    """``sum_{i>=2} a_i (2^i - 2) >= a_0 - 1``, i.e. ``P(2) >= 2 P(1) - 1``."""
    _require_degree(p, "eq1_check")
    lhs, rhs = eq1_terms(p)
    if lhs - rhs != p(2) - 2 * p(1) + 1:
        raise ArithmeticError("eq1 self-test failed: coefficient form disagrees with P(2) - 2P(1) + 1")
    return lhs >= rhs


def monotone_preconditions(p: Polynomial) -> list[str]:
    if p.degree < 2:
        return [f"degree >= 2 (got {p.degree})"]
    out = []
    neg = [i for i in range(2, len(p)) if p[i] < 0]
    if neg:
        out.append(f"a_i >= 0 for i >= 2 (negative at {neg})")
    if p(1) <= 0:
        out.append(f"P(1) > 0 (got {p(1)})")
    if not eq1_check(p):
        out.append("P(2) >= 2 P(1) - 1")
    return out


def monotone_check(p: Polynomial, k_max: int) -> MonotoneResult:
    """Tabulate ``(P(k) - 1)/k`` for k = 1..k_max.

    ``ok`` holds when the step from k=1 is non-decreasing and every later
    step is strictly increasing; ``weak_at_k1`` flags equality at the first
    step.
    """
    if k_max < 1:
        raise InputError("k_max must be positive")
    bad = monotone_preconditions(p)
    if bad:
        raise PreconditionError(bad)
    table = tuple((k, (p(k) - 1) / k) for k in range(1, k_max + 1))
    vals = [v for _, v in table]
    ok = all(vals[i + 1] > vals[i] if i >= 1 else vals[i + 1] >= vals[i] for i in range(len(vals) - 1))
    weak = len(vals) > 1 and vals[1] == vals[0]
    return MonotoneResult(table, ok, weak)


def wedge_slope_sign(h0L: Number, ell: int, r: int, k: int) -> int:
    """Sign of ``k - ell r / (h0L - 1)``, the slope of wedge^r M_L (x) H^k in
    units of H^dim."""
    h0L = Fraction(h0L)
    if not 0 < r < h0L - 1:
        raise InputError(f"r must satisfy 0 < r < h0L - 1 = {h0L - 1}, got {r}")
    x = k - Fraction(ell * r) / (h0L - 1)
    return (x > 0) - (x < 0)


def wedge_c1_factor(m: int, r: int) -> int:
    """``c_1(wedge^r E) / c_1(E)`` for E of rank m, which is binom(m-1, r-1)."""
    if not 0 < r <= m:
        raise InputError(f"need 0 < r <= m, got r={r}, m={m}")
    return comb(m - 1, r - 1)


def _verdict(rows: tuple[CertificateRow, ...]) -> Verdict:
    if all(r.strict for r in rows):
        return Verdict.PASS_STRICT
    if all(r.margin >= 0 for r in rows) and all(r.strict for r in rows if r.k != 1):
        return Verdict.PASS_WEAK_AT_K1
    return Verdict.FAIL


def destabilizing_search(
    p: Polynomial,
    ell: int,
    *,
    picard_rank_one: bool = False,
    minus_K_nef: bool = False,
    report: Optional[CriterionReport] = None,
) -> StabilityCertificate:
    """Certificate rows for ``L = H^ell``.

    The hypotheses flags are echoed into the certificate and never checked.
    """
    if not isinstance(ell, int) or ell < 1:
        raise InputError(f"ell must be a positive integer, got {ell!r}")
    report = report or check_condition3(p)
    if not report.condition3:
        raise PreconditionError(["positivity condition: P(1) > 0 and a_i >= 0 for i >= 2"])
    h0 = p(ell)
    rows = tuple(CertificateRow(k, k * (h0 - 1) / ell, p(k) - 1) for k in range(1, ell))
    verdict = _verdict(rows)
    notes = (WEAK_AT_K1_NOTE,) if verdict is Verdict.PASS_WEAK_AT_K1 else ()
    return StabilityCertificate(ell, h0, rows, verdict, picard_rank_one, minus_K_nef, notes)


def ratio_verdict_strict(p: Polynomial, ell: int) -> bool:
    """``(P(ell)-1)/ell > (P(k)-1)/k`` for every 1 <= k < ell."""
    top = (p(ell) - 1) / ell
    return all(top > (p(k) - 1) / k for k in range(1, ell))


@dataclass(frozen=True)
class SyzygyData:
    h0: Fraction
    rank: Fraction
    c1_in_H_units: int
    slope: Fraction


def syzygy_data(p: Polynomial, ell: int) -> SyzygyData:
    """Rank, c_1 and slope (in H units) of M_L for ``L = H^ell``."""
    if ell < 1:
        raise InputError(f"ell must be positive, got {ell}")
    h0 = p(ell)
    if h0 < 2:
        raise InputError(f"P(ell) = {h0} < 2: the syzygy bundle would have rank < 1")
    return SyzygyData(h0, h0 - 1, -ell, Fraction(-ell) / (h0 - 1))
