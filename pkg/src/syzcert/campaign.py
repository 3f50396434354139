"""Exhaustive verification over all Fano/Calabi-Yau multidegrees."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from .ci_hilbert import (
    MultiDegree,
    enumerate_multidegrees,
    f_poly,
    lemma31_check,
    lemma32_check,
    nonneg_check,
    oracle_match,
    parity_check,
)
from .errors import InputError
from .exactalg import Polynomial

T = TypeVar("T")
R = TypeVar("R")

CHECKS = ("nonneg", "lemma31", "lemma32", "parity", "oracle")


@dataclass(frozen=True)
class VerificationRow:
    """Outcome of every check on one multidegree; ``None`` marks a check
    whose hypotheses do not apply (e.g. lemmas with k = 0)."""

    md: MultiDegree
    polynomial: Polynomial
    nonneg: bool
    lemma31: Optional[bool]
    lemma32: Optional[bool]
    parity: Optional[bool]
    oracle: bool

    @property
    def failed(self) -> bool:
        return any(getattr(self, c) is False for c in CHECKS)


def verify_case(md: MultiDegree, t_max: int = 20) -> VerificationRow:
    lemma_ok = md.n >= 2 and md.k >= 1
    return VerificationRow(
        md=md,
        polynomial=f_poly(md),
        nonneg=nonneg_check(md)[0],
        lemma31=lemma31_check(md) if lemma_ok else None,
        lemma32=lemma32_check(md) if lemma_ok else None,
        parity=parity_check(md) if md.k >= 1 and md.degree_sum == md.n + 1 else None,
        oracle=oracle_match(md, t_max),
    )


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """``[fn(x) for x in items]`` spread over ``workers`` processes, in input order."""
    if workers < 1:
        raise InputError("workers must be at least 1")
    if workers == 1:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _verify_star(args):
    return verify_case(*args)


def run_campaign(n_max: int, t_max: int = 20, workers: int = 1) -> list[VerificationRow]:
    """Verify every enumerated case; rows come back in enumeration order
    regardless of ``workers``."""
    if t_max < n_max:
        raise InputError(f"t_max={t_max} must be at least n_max={n_max}")
    cases = [(md, t_max) for md in enumerate_multidegrees(n_max)]
    return parallel_map(_verify_star, cases, workers)


def count_failures(rows: Iterable[VerificationRow]) -> int:
    return sum(r.failed for r in rows)
