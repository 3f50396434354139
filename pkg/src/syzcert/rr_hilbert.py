"""Hilbert polynomials from Riemann-Roch data.

Covers abelian varieties (a single monomial), the Todd-class expansion

    P_H(t) = sum_i td_{n-i}(X) H^i / i! * t^i

for dimension 2..5, and polynomials supplied from files (for instance
hyperkahler data computed elsewhere).
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from os import PathLike
from typing import IO, Optional, Sequence, Union

from .errors import InputError, NonCanonicalInput
from .exactalg import Number, Polynomial, is_integer_valued, parse_rational


@dataclass(frozen=True)
class ToddVector:
    """``entries[i] = td_{n-i}(X) . H^i`` for i = 0..n."""

    n: int
    entries: tuple[Fraction, ...]
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if not 2 <= self.n <= 5:
            raise InputError(f"Todd vectors are supported for 2 <= n <= 5, got n={self.n}")
        entries = tuple(Fraction(e) for e in self.entries)
        if len(entries) != self.n + 1:
            raise InputError(f"expected {self.n + 1} entries for n={self.n}, got {len(entries)}")
        if entries[self.n] <= 0:
            raise InputError(f"H^n must be positive, got {entries[self.n]}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_entries(cls, entries: Sequence[Number]) -> "ToddVector":
        return cls(len(entries) - 1, tuple(entries))

    @property
    def chi_O(self) -> Fraction:
        return self.entries[0]


@dataclass(frozen=True)
class ChernData:
    """Intersection numbers of c_1, c_2 with powers of the polarization."""

    n: int
    Hn: Fraction
    c1H: Fraction
    c1sqH: Fraction
    c2H: Fraction
    chiO: Fraction
    c1c2H: Optional[Fraction] = None

    FIELDS = ("n", "Hn", "c1H", "c1sqH", "c2H", "c1c2H", "chiO")

    def __post_init__(self):
        if not 2 <= self.n <= 4:
            raise InputError(
                f"Chern data is supported for 2 <= n <= 4, got n={self.n}; "
                "for n = 5 supply a Todd vector directly"
            )
        for name in ("Hn", "c1H", "c1sqH", "c2H", "chiO"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.Hn <= 0:
            raise InputError(f"H^n must be positive, got {self.Hn}")
        if self.n >= 3:
            if self.c1c2H is None:
                raise InputError("c1c2H is required when n >= 3")
            object.__setattr__(self, "c1c2H", Fraction(self.c1c2H))

    @classmethod
    def from_mapping(cls, values: dict) -> "ChernData":
        unknown = set(values) - set(cls.FIELDS)
        if unknown:
            raise InputError(f"unknown Chern data keys: {sorted(unknown)}")
        missing = {"n", "Hn", "c1H", "c1sqH", "c2H", "chiO"} - set(values)
        if missing:
            raise InputError(f"missing Chern data keys: {sorted(missing)}")
        kw = {}
        for key, raw in values.items():
            if key == "n":
                try:
                    kw["n"] = int(raw)
                except ValueError:
                    raise InputError(f"n must be an integer, got {raw!r}") from None
            else:
                kw[key] = raw if isinstance(raw, (int, Fraction)) else parse_rational(str(raw))
        return cls(**kw)


def abelian_poly(n: int, Hn: Number) -> Polynomial:
    """``(H^n / n!) t^n``."""
    if n < 1:
        raise InputError(f"dimension must be positive, got {n}")
    if Hn <= 0:
        raise InputError(f"H^n must be positive, got {Hn}")
    return Polynomial.monomial(Fraction(Hn) / factorial(n), n)


def todd_poly(tv: ToddVector) -> Polynomial:
    return Polynomial(e / factorial(i) for i, e in enumerate(tv.entries))


def chern_to_todd(cd: ChernData) -> ToddVector:
    """Fill a Todd vector from td_0 = 1, td_1 = c_1/2, td_2 = (c_1^2 + c_2)/12,
    td_3 = c_1 c_2/24 and td_n = chi(O_X).

    In low dimension the constant entry is determined twice (td_2 for
    surfaces, td_3 for threefolds).  ``chiO`` wins and a note records any
    disagreement.
    """
    n = cd.n
    e: list[Fraction] = [Fraction(0)] * (n + 1)
    e[n] = cd.Hn
    e[n - 1] = cd.c1H / 2
    e[n - 2] = (cd.c1sqH + cd.c2H) / 12
    if n >= 3:
        e[n - 3] = cd.c1c2H / 24
    notes = []
    if e[0] != cd.chiO:
        source = "(c1^2 + c2)/12" if n == 2 else "c1*c2/24"
        notes.append(f"chiO={cd.chiO} differs from {source}={e[0]}; using chiO")
    e[0] = cd.chiO
    return ToddVector(n, tuple(e), tuple(notes))


def integrality_warnings(p: Polynomial) -> list[str]:
    if is_integer_valued(p):
        return []
    bad = next(m for m in range(len(p)) if p(m).denominator != 1)
    return [f"chi(H^m) is not an integer at m={bad}: {p(bad)}"]


def parse_poly_text(text: str) -> Polynomial:
    """Parse ``a_0 a_1 ... a_n`` (one line, rational text form).

    Trailing zero coefficients are dropped with a :class:`NonCanonicalInput`
    warning.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("empty polynomial input")
    if len(lines) > 1:
        raise InputError("polynomial input must be a single line")
    tokens = lines[0].split()
    p = Polynomial.from_text(lines[0])
    if len(p) != len(tokens):
        warnings.warn(
            f"dropped {len(tokens) - len(p)} trailing zero coefficient(s)",
            NonCanonicalInput,
            stacklevel=2,
        )
    return p


def parse_poly_file(source: Union[str, PathLike, IO[str]]) -> Polynomial:
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return parse_poly_text(source.read())
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read polynomial file: {exc}") from None
    return parse_poly_text(text)


def parse_chern_file(source: Union[str, PathLike, IO[str]]) -> ChernData:
    """Read ``key=value`` lines (``#`` comments allowed) into :class:`ChernData`."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read Chern data file: {exc}") from None
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise InputError(f"line {lineno}: expected key=value")
        values[key.strip()] = value.strip()
    return ChernData.from_mapping(values)
