"""Pfaffians, copfaffians, the minor summation, and orthogonal equivariance."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfaffkit.linalg import anti_identity, det_exact, mat_mul, transpose
from pfaffkit.pfaffian import (
    AlternatingMatrix,
    AntiAlternatingMatrix,
    ShapeError,
    all_pairings,
    cayley_orthogonal,
    cofactor_pfaffian,
    complementary_minor_check,
    copfaffian_expansion_check,
    copfaffian_matrix,
    equivariance_check,
    lie_algebra_membership,
    minor_summation_rhs,
    pfaffian,
    pfaffian_definitional,
    pfaffian_of_anti_alternating,
    random_orthogonal_cayley,
    verify_minor_summation,
)
from pfaffkit.rings import Poly


def a(i, j):
    return Poly.var(f"a[{i},{j}]")


# --- plain Pfaffian ---------------------------------------------------------


def test_empty_matrix():
    assert pfaffian(AlternatingMatrix([])) == 1
    assert pfaffian_definitional(AlternatingMatrix([])) == 1


def test_two_by_two():
    A = AlternatingMatrix.generic(2)
    assert pfaffian(A) == a(1, 2)


def test_four_by_four_golden():
    A = AlternatingMatrix.generic(4)
    expected = a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3)
    assert pfaffian(A) == expected
    assert str(pfaffian(A)) == "a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3]"


def test_odd_size_rejected():
    with pytest.raises(ShapeError):
        AlternatingMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])


def test_not_alternating_rejected():
    with pytest.raises(ShapeError):
        AlternatingMatrix([[0, 1], [1, 0]])
    with pytest.raises(ShapeError):
        AlternatingMatrix([[1, 1], [-1, 0]])


def test_all_pairings_count():
    # (2m)! / (2^m m!) perfect matchings
    counts = [len(list(all_pairings(tuple(range(2 * m))))) for m in range(5)]
    assert counts == [1, 1, 3, 15, 105]


def test_routes_agree_symbolic():
    for size in (2, 4, 6):
        A = AlternatingMatrix.generic(size)
        assert pfaffian(A) == pfaffian_definitional(A)


def test_routes_agree_random():
    rng = random.Random(2)
    for _ in range(5):
        A = AlternatingMatrix.random_rational(8, rng)
        assert pfaffian(A) == pfaffian_definitional(A)


def test_pfaffian_squares_to_determinant():
    rng = random.Random(3)
    for size in (2, 4, 6):
        A = AlternatingMatrix.generic(size)
        assert pfaffian(A) ** 2 == det_exact(A.rows)
    for _ in range(10):
        A = AlternatingMatrix.random_rational(8, rng)
        assert pfaffian(A) ** 2 == det_exact(A.rows)


def test_scaling_law():
    A = AlternatingMatrix.generic(4)
    assert pfaffian(A.scale(Fraction(3))) == Fraction(9) * pfaffian(A)


# --- copfaffians ------------------------------------------------------------


def test_cofactor_goldens():
    A2 = AlternatingMatrix.generic(2)
    assert cofactor_pfaffian(A2, 1, 2) == 1
    assert cofactor_pfaffian(A2, 2, 1) == -1
    A4 = AlternatingMatrix.generic(4)
    assert cofactor_pfaffian(A4, 1, 1) == 0
    assert cofactor_pfaffian(A4, 1, 3) == -a(2, 4)
    assert cofactor_pfaffian(A4, 3, 1) == a(2, 4)


def test_copfaffian_matrix_is_alternating():
    A = AlternatingMatrix.generic(4)
    G = copfaffian_matrix(A)
    assert G.size == 4
    assert G.entry(1, 2) == -G.entry(2, 1)


def test_expansion_symbolic():
    for size in (2, 4, 6):
        assert copfaffian_expansion_check(AlternatingMatrix.generic(size))


def test_expansion_random():
    rng = random.Random(4)
    for _ in range(20):
        assert copfaffian_expansion_check(AlternatingMatrix.random_rational(8, rng))


def test_complementary_minor_all_subsets():
    from itertools import combinations

    rng = random.Random(5)
    while True:
        A = AlternatingMatrix.random_rational(6, rng)
        if pfaffian(A) != 0:
            break
    for m in (0, 2, 4, 6):
        for I in combinations(range(1, 7), m):
            assert complementary_minor_check(A, I)


# --- anti-alternating matrices ---------------------------------------------


def test_coloring_validation():
    with pytest.raises(ShapeError):
        AntiAlternatingMatrix.generic(1, 2)  # odd total
    with pytest.raises(ShapeError):
        AntiAlternatingMatrix.generic(0, 2)


def test_full_layout_golden():
    X = AntiAlternatingMatrix.generic(2, 2)
    b, c = Poly.var("b[1,2]"), Poly.var("c[1,2]")
    expected = (
        (a(1, 1), a(1, 2), b, Poly.zero()),
        (a(2, 1), a(2, 2), Poly.zero(), -b),
        (c, Poly.zero(), -a(2, 2), -a(1, 2)),
        (Poly.zero(), -c, -a(2, 1), -a(1, 1)),
    )
    assert X.full() == expected


def test_full_satisfies_defining_relation():
    # tX J + J X = 0
    for p, q in ((1, 1), (2, 2), (1, 3), (3, 1), (2, 4)):
        X = AntiAlternatingMatrix.generic(p, q)
        F = [list(r) for r in X.full()]
        J = anti_identity(p + q)
        lhs = mat_mul(transpose(F), J)
        rhs = mat_mul(J, F)
        n2 = p + q
        assert all(lhs[i][j] + rhs[i][j] == Poly.zero() for i in range(n2) for j in range(n2))


def test_to_alternating_is_x_times_j():
    X = AntiAlternatingMatrix.generic(2, 2)
    F = [list(r) for r in X.full()]
    XJ = mat_mul(F, anti_identity(4))
    A = X.to_alternating()
    assert [list(r) for r in A.rows] == [list(r) for r in XJ]


def test_pfaffian_goldens_by_coloring():
    assert str(pfaffian_of_anti_alternating(AntiAlternatingMatrix.generic(1, 1))) == "a[1,1]"
    assert (
        str(pfaffian_of_anti_alternating(AntiAlternatingMatrix.generic(2, 2)))
        == "a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]"
    )
    assert (
        str(pfaffian_of_anti_alternating(AntiAlternatingMatrix.generic(1, 3)))
        == "c[2,3]*a[1,1] - c[1,3]*a[1,2] + c[1,2]*a[1,3]"
    )


def test_minor_summation_identity():
    for total in (2, 4, 6):
        for p in range(1, total):
            assert verify_minor_summation(p, total - p)


def test_minor_summation_random_points():
    rng = random.Random(6)
    for p, q in ((2, 2), (1, 3), (2, 4), (3, 3)):
        for _ in range(5):
            X = AntiAlternatingMatrix.random_rational(p, q, rng)
            assert pfaffian_of_anti_alternating(X) == minor_summation_rhs(X)


# --- orthogonal group action ------------------------------------------------


def S_values():
    return [
        anti_identity(4),
        anti_identity(6),
        tuple(tuple(Fraction(v) for v in row) for row in ((2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 1, 0), (0, 0, 0, 3))),
    ]


def test_cayley_produces_orthogonal():
    rng = random.Random(7)
    for S in S_values():
        for _ in range(5):
            g = random_orthogonal_cayley(S, rng)
            got = mat_mul(mat_mul(transpose(g), S), g)
            assert [list(r) for r in got] == [list(r) for r in S]


def test_cayley_golden_n1():
    # diag(t, -t) preserves the split form, and t = 2 maps to diag(-1/3, -3)
    S = anti_identity(2)
    Y = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(-2)]]
    g = cayley_orthogonal(Y, S)
    assert [list(r) for r in g] == [[Fraction(-1, 3), Fraction(0)], [Fraction(0), Fraction(-3)]]


def test_membership_reports():
    S = anti_identity(4)
    X = AntiAlternatingMatrix.generic(2, 2)
    full = [list(r) for r in X.full()]
    ok_right, ok_left = lie_algebra_membership(full, S)
    assert ok_right and ok_left


def test_equivariance():
    rng = random.Random(8)
    for S in S_values():
        n2 = len(S)
        for _ in range(10):
            g = random_orthogonal_cayley(S, rng)
            A = AlternatingMatrix.random_rational(n2, rng)
            assert equivariance_check(A, g)


@given(st.integers(min_value=1, max_value=3), st.randoms(use_true_random=False))
@settings(max_examples=25, deadline=None)
def test_pfaffian_vanishes_on_rank_two_updates(m, rng):
    # Pf of u v^t - v u^t padded into 2m x 2m is zero for m > 1
    n = 2 * m
    u = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
    v = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
    rows = [[u[i] * v[j] - v[i] * u[j] for j in range(n)] for i in range(n)]
    A = AlternatingMatrix(rows)
    if m > 1:
        assert pfaffian(A) == 0
