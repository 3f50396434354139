from fractions import Fraction

import pytest

from syzcert.ci_hilbert import MultiDegree, f_poly
from syzcert.errors import InputError
from syzcert.exactalg import Polynomial
from syzcert.weyl_hilbert import (
    RootDatum,
    build_root_table,
    cartan_matrix,
    dim_check,
    hilbert_homogeneous,
    weyl_factors,
)

from oracles import euclidean_weyl_values

CLASSICAL = [(t, r) for t in "ABCD" for r in range(1, 9) if r >= {"A": 1, "B": 2, "C": 2, "D": 3}[t]]
ROOT_COUNT = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}


def test_a2_pairings():
    table = build_root_table(RootDatum("A", 2, 1))
    assert len(table.positive_roots) == 3
    assert sorted(table.coroot_pairings) == sorted([(1, 1), (0, 1), (1, 2)])


def test_b2_pairings():
    table = build_root_table(RootDatum("B", 2, 1))
    assert len(table.positive_roots) == 4
    nonzero = sorted(p for p in table.coroot_pairings if p[0])
    assert nonzero == [(1, 1), (1, 2), (2, 3)]
    assert sum(1 for p in table.coroot_pairings if p[0] == 0) == 1


@pytest.mark.parametrize("node", [1, 2])
def test_g2_root_count(node):
    assert len(build_root_table(RootDatum("G", 2, node)).positive_roots) == 6


@pytest.mark.parametrize("t,r", CLASSICAL)
def test_root_counts_and_simple_coroots(t, r):
    table = build_root_table(RootDatum(t, r, 1))
    assert len(table.positive_roots) == ROOT_COUNT[t](r)
    for root, (_, rho) in zip(table.positive_roots, table.coroot_pairings):
        assert rho >= 1
        if sum(root) == 1:
            assert rho == 1


@pytest.mark.parametrize("t,r,count", [("E", 6, 36), ("E", 7, 63), ("E", 8, 120), ("F", 4, 24)])
def test_exceptional_root_counts(t, r, count):
    assert len(build_root_table(RootDatum(t, r, 1)).positive_roots) == count


def test_cartan_conventions():
    # B_n: a_n short, so <a_n^v, a_{n-1}> = -2
    b3 = cartan_matrix("B", 3)
    assert b3[2][1] == -2 and b3[1][2] == -1
    c3 = cartan_matrix("C", 3)
    assert c3[1][2] == -2 and c3[2][1] == -1


def test_projective_space():
    for n in range(1, 9):
        p = hilbert_homogeneous(RootDatum("A", n, 1))
        assert p == f_poly(MultiDegree(n))


def test_odd_quadric_b2():
    expected = Polynomial((1, Fraction(13, 6), Fraction(3, 2), Fraction(1, 3)))
    # (t+1)(t+2)(2t+3)/6
    factored = Polynomial((1, 1)) * Polynomial((2, 1)) * Polynomial((3, 2)) / 6
    assert expected == factored
    assert hilbert_homogeneous(RootDatum("B", 2, 1)) == factored


def test_grassmannian_gr24():
    p = hilbert_homogeneous(RootDatum("A", 3, 2))
    factored = Polynomial((1, 1)) * Polynomial((2, 1)) ** 2 * Polynomial((3, 1)) / 12
    assert p == factored
    assert p(1) == 6 and p(2) == 20


@pytest.mark.parametrize("t,r,node,dim", [("A", 3, 1, 3), ("A", 3, 2, 4), ("B", 2, 1, 3)])
def test_dim_check_examples(t, r, node, dim):
    rd = RootDatum(t, r, node)
    assert dim_check(rd) == dim


@pytest.mark.parametrize("t,r", CLASSICAL + [("G", 2)])
def test_degree_equals_dimension_and_positivity(t, r):
    for node in range(1, r + 1):
        rd = RootDatum(t, r, node)
        p = hilbert_homogeneous(rd)
        assert p.degree == dim_check(rd)
        assert p(0) == 1
        for lam, rho in weyl_factors(rd):
            assert lam > 0 and rho > 0
        assert all(a >= 0 for a in p)


@pytest.mark.parametrize("t,r", [(t, r) for t, r in CLASSICAL if r <= 6])
def test_matches_euclidean_inner_product_model(t, r):
    ts = list(range(0, 6))
    for node in range(1, r + 1):
        rd = RootDatum(t, r, node)
        p = hilbert_homogeneous(rd)
        values, dim = euclidean_weyl_values(t, r, node, ts)
        assert dim == dim_check(rd)
        assert [p(x) for x in ts] == values


@pytest.mark.parametrize(
    "t,r,node,sections",
    [
        # dimensions of fundamental representations
        ("G", 2, 1, 7),
        ("G", 2, 2, 14),
        ("F", 4, 1, 52),
        ("F", 4, 4, 26),
        ("E", 6, 1, 27),
        ("E", 6, 2, 78),
        ("E", 7, 7, 56),
        ("E", 7, 1, 133),
        ("E", 8, 8, 248),
        ("C", 3, 3, 14),
        ("D", 5, 5, 16),
        ("B", 3, 3, 8),
    ],
)
def test_h0_equals_fundamental_representation(t, r, node, sections):
    assert hilbert_homogeneous(RootDatum(t, r, node))(1) == sections


def test_quadrics_cross_engine():
    for m in range(2, 7):
        assert hilbert_homogeneous(RootDatum("B", m, 1)) == f_poly(MultiDegree(2 * m, (2,)))
    for m in range(3, 7):
        assert hilbert_homogeneous(RootDatum("D", m, 1)) == f_poly(MultiDegree(2 * m - 1, (2,)))


def test_d3_is_a3():
    # D_3 = A_3: node 1 of D_3 (quadric in P^5) is Gr(2,4) = node 2 of A_3
    assert hilbert_homogeneous(RootDatum("D", 3, 1)) == hilbert_homogeneous(RootDatum("A", 3, 2))


@pytest.mark.parametrize(
    "t,r,node",
    [("A", 0, 1), ("B", 1, 1), ("D", 2, 1), ("G", 3, 1), ("E", 5, 1), ("A", 3, 4), ("A", 3, 0), ("Z", 2, 1)],
)
def test_root_datum_rejects(t, r, node):
    with pytest.raises(InputError):
        RootDatum(t, r, node)
