"""Hilbert polynomials of rational homogeneous spaces G/P, P maximal.

For the ample generator H attached to the fundamental weight of the marked
node, Borel-Weil-Bott gives

    P_H(t) = prod over positive roots a of (t * <w, a^v> / <rho, a^v> + 1).

Pairings are taken against coroots so that everything stays integral; the
ratio does not depend on how the invariant form is normalized.  Nodes use
Bourbaki numbering:

    ========================  =====================
    space                     (type, rank, node)
    ========================  =====================
    P^n                       (A, n, 1)
    Gr(k, n+1)                (A, n, k)
    quadric Q^(2m-1)          (B, m, 1)
    quadric Q^(2m-2)          (D, m, 1)
    Lagrangian Grassmannian   (C, m, m)
    spinor variety            (D, m, m) or (B, m, m)
    P^(2m-1) (symplectic)     (C, m, 1)
    Q^5 / G_2 adjoint         (G, 2, 1) / (G, 2, 2)
    ========================  =====================
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .exactalg import Polynomial

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"G": 2, "F": 4, "E": (6, 7, 8)}


@dataclass(frozen=True)
class RootDatum:
    lie_type: str
    rank: int
    marked_node: int

    def __post_init__(self):
        t = str(self.lie_type).upper()
        object.__setattr__(self, "lie_type", t)
        if t in _MIN_RANK:
            if self.rank < _MIN_RANK[t]:
                raise InputError(f"type {t} needs rank >= {_MIN_RANK[t]}, got {self.rank}")
        elif t in ("G", "F"):
            if self.rank != _FIXED_RANK[t]:
                raise InputError(f"type {t} has rank {_FIXED_RANK[t]}, got {self.rank}")
        elif t == "E":
            if self.rank not in _FIXED_RANK["E"]:
                raise InputError(f"type E has rank 6, 7 or 8, got {self.rank}")
        else:
            raise InputError(f"unsupported Lie type {self.lie_type!r}")
        if not 1 <= self.marked_node <= self.rank:
            raise InputError(f"marked node must lie in 1..{self.rank}, got {self.marked_node}")

    def __str__(self) -> str:
        return f"{self.lie_type}{self.rank}/P{self.marked_node}"


@dataclass(frozen=True)
class RootTable:
    """Positive roots in simple-root coordinates, with for each root the
    pair ``(<w_marked, a^v>, <rho, a^v>)``."""

    positive_roots: tuple[tuple[int, ...], ...]
    coroot_pairings: tuple[tuple[int, int], ...]


def cartan_matrix(lie_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``A[i][j] = <a_i^v, a_j>`` (0-based, Bourbaki order)."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1], a[j - 1][i - 1] = aij, aji

    t = lie_type
    if t in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if t == "B":
            # a_n short
            bond(n - 1, n, -1, -2)
        elif t == "C":
            # a_n long
            bond(n - 1, n, -2, -1)
    elif t == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif t == "G":
        # a_1 short, a_2 long
        bond(1, 2, -3, -1)
    elif t == "F":
        bond(1, 2)
        # a_1, a_2 long; a_3, a_4 short
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif t == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    else:
        raise InputError(f"unsupported Lie type {lie_type!r}")
    return tuple(map(tuple, a))


def _half_norms(cartan) -> list[Fraction]:
    """``(a_i, a_i)/2`` for each simple root, up to a global scale."""
    n = len(cartan)
    d: list = [None] * n
    d[0] = Fraction(1)
    # (a_i, a_j) = A[i][j] d_i must be symmetric; propagate over the Dynkin graph
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    return d


def _positive_roots(cartan) -> list[tuple[int, ...]]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, a_i^v>
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = tuple(b + (j == i) for j, b in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


@lru_cache(maxsize=None)
def _table(lie_type: str, rank: int, node: int) -> RootTable:
    cartan = cartan_matrix(lie_type, rank)
    half = _half_norms(cartan)
    roots = _positive_roots(cartan)
    pairings = []
    for r in roots:
        norm = sum(r[i] * r[j] * cartan[i][j] * half[i] for i in range(rank) for j in range(rank))
        # a^v = sum_j r_j (|a_j|^2 / |a|^2) a_j^v
        co = [r[j] * 2 * half[j] / norm for j in range(rank)]
        if any(c.denominator != 1 for c in co):
            raise AssertionError(f"non-integral coroot for {r}")
        co = [int(c) for c in co]
        pairings.append((co[node - 1], sum(co)))
    return RootTable(tuple(roots), tuple(pairings))


def build_root_table(rd: RootDatum) -> RootTable:
    return _table(rd.lie_type, rd.rank, rd.marked_node)


def weyl_factors(rd: RootDatum) -> list[tuple[int, int]]:
    """``(<w, a^v>, <rho, a^v>)`` for the roots with nonzero weight pairing."""
    return [pr for pr in build_root_table(rd).coroot_pairings if pr[0] != 0]


def hilbert_homogeneous(rd: RootDatum) -> Polynomial:
    p = Polynomial.constant(1)
    for lam, rho in weyl_factors(rd):
        p = p * Polynomial.linear(Fraction(lam, rho), 1)
    return p


def dim_check(rd: RootDatum) -> int:
    """Number of positive roots not orthogonal to the marked weight (= dim G/P)."""
    return len(weyl_factors(rd))
