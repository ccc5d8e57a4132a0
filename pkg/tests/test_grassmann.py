"""Exterior algebra with module coefficients: canonical 2-forms and their identities."""

import random
from fractions import Fraction

import pytest

from pfaffkit.grassmann import (
    Forms,
    GrassmannElement,
    build_forms,
    check_eta_anticommute,
    check_sl2,
    check_structure,
    check_theta_powers,
    check_top_form_route,
    check_trinomial,
    check_xi_power_formula,
    eta,
    pfaffian_from_top_form,
    xi_at,
    xi_shifted_power,
)
from pfaffkit.pfaffian import AntiAlternatingMatrix, pfaffian_of_anti_alternating
from pfaffkit.rings import Poly


def w(labels, coeff=Fraction(1), p=2, q=2):
    return GrassmannElement.from_word(p, q, labels, coeff)


# --- the exterior algebra itself ---------------------------------------------


def test_generator_square_vanishes():
    for lab in (1, 2, -1, -2):
        assert not w([lab]) * w([lab])


def test_anticommutativity():
    assert w([1]) * w([2]) == -(w([2]) * w([1]))
    assert w([1]) * w([-2]) == -(w([-2]) * w([1]))


def test_word_normalization_sign():
    # e2 e1 = -e1 e2 regardless of construction order
    assert w([2, 1]) == -w([1, 2])
    assert w([2, 1], Fraction(-1)) == w([1, 2])


def test_repeated_label_word_is_zero():
    assert not w([1, 1])
    assert not w([1, 2, 1])


def test_product_associative():
    rng = random.Random(11)
    labels = [1, 2, -1, -2]
    for _ in range(40):
        xs = []
        for _ in range(3):
            e = GrassmannElement.zero(2, 2)
            for _ in range(rng.randint(1, 3)):
                word = rng.sample(labels, rng.randint(0, 2))
                e = e + w(word, Fraction(rng.randint(-3, 3)))
            xs.append(e)
        assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])


def test_top_coefficient():
    top = w([1, 2, -2, -1], Fraction(5))
    assert top.top_coefficient() == Fraction(5)
    assert w([1]).top_coefficient() == Fraction(0)


def test_even_elements_commute():
    a = w([1, 2]) + w([1, -1], Fraction(2))
    b = w([2, -2]) + w([-2, -1], Fraction(-3))
    assert a * b == b * a
    assert not a.commutator(b)


def test_coefficients_ride_along():
    # module coefficients multiply on the left in the order the factors appear
    x = Poly.var("x")
    y = Poly.var("y")
    lhs = GrassmannElement.from_word(2, 2, [1], x) * GrassmannElement.from_word(2, 2, [2], y)
    assert lhs == GrassmannElement.from_word(2, 2, [1, 2], x * y)


# --- canonical forms ----------------------------------------------------------


def test_forms_n1_goldens():
    f = build_forms("uea", n=1)
    assert str(f.omega) == "2*a[1,1] e[1]e[-1]"
    assert str(f.xi) == "a[1,1] e[1]e[-1]"
    assert not f.theta and not f.theta_prime
    assert str(f.tau) == "e[1]e[-1]"


def test_forms_theta_n2():
    f = build_forms("uea", n=2)
    assert str(f.theta) == "2*b[1,2] e[1]e[2]"


def test_omega_decomposition():
    for n in (1, 2, 3):
        f = build_forms("uea", n=n)
        assert f.omega == f.theta_prime + f.xi.scale(Fraction(2)) + f.theta


def test_build_forms_commutative_rectangular():
    f = build_forms("commutative", p=1, q=3)
    assert f.p == 1 and f.q == 3
    assert check_structure(f)


def test_build_forms_validation():
    with pytest.raises(ValueError):
        build_forms("uea")  # needs n
    with pytest.raises(ValueError):
        build_forms("commutative", p=1, q=2)  # odd total
    with pytest.raises(ValueError):
        build_forms("nope", n=1)


def test_structure_all_modes():
    for n in (1, 2, 3):
        assert check_structure(build_forms("uea", n=n))
    for p, q in ((1, 1), (2, 2), (1, 3), (3, 3), (2, 4)):
        assert check_structure(build_forms("commutative", p=p, q=q))


def test_sl2_relations():
    for n in (1, 2, 3):
        assert check_sl2(n)


def test_omega_power_past_top_vanishes():
    for n in (1, 2):
        f = build_forms("uea", n=n)
        assert not f.omega.power(n + 1, one=f.one())


def test_xi_shift_is_affine_in_u():
    f = build_forms("uea", n=2)
    assert xi_at(f, Fraction(3)) - xi_at(f, Fraction(0)) == f.tau.scale(Fraction(3))


def test_xi_power_formula_sweep():
    for n in (1, 2, 3):
        f = build_forms("uea", n=n)
        for r in range(n + 1):
            for u in (Fraction(-1), Fraction(0), Fraction(1), Fraction(2)):
                assert check_xi_power_formula(n, u, r, forms=f)


def test_xi_shifted_power_degenerate_cases():
    f = build_forms("uea", n=2)
    assert xi_shifted_power(f, Fraction(0), 0) == f.one()
    assert not xi_shifted_power(f, Fraction(0), 3)  # r > n has no room


def test_eta_anticommutation():
    for n in (1, 2, 3):
        for u in (Fraction(-1), Fraction(0), Fraction(2)):
            assert check_eta_anticommute(n, u)


def test_eta_shift_is_needed():
    # the square of eta_1 at a single argument does not vanish over the
    # enveloping algebra; staggering the argument by one makes it vanish
    f = build_forms("uea", n=2)
    assert eta(f, 1, Fraction(0)) * eta(f, 1, Fraction(0))
    assert not eta(f, 1, Fraction(1)) * eta(f, 1, Fraction(0))


def test_theta_power_expansions():
    for n in (1, 2, 3):
        for s in range(n + 1):
            for t in range(n + 1):
                assert check_theta_powers(n, s, t, mode="uea")
    for n in (1, 2, 3, 4):
        for s in range(n + 1):
            for t in range(n + 1):
                assert check_theta_powers(n, s, t, mode="commutative")


def test_trinomial_expansions():
    for n in (1, 2, 3):
        for m in range(n + 1):
            assert check_trinomial(n, m, mode="uea")
    for n in (1, 2, 3, 4):
        for m in range(n + 1):
            assert check_trinomial(n, m, mode="commutative")


def test_trinomial_rectangular():
    for p, q in ((1, 3), (2, 4)):
        half = (p + q) // 2
        for m in range(half + 1):
            assert check_trinomial(half, m, mode="commutative", p=p, q=q)


# --- top-degree route ----------------------------------------------------------


def test_top_form_recovers_pfaffian_commutative():
    for p, q in ((1, 1), (2, 2), (1, 3), (3, 3)):
        X = AntiAlternatingMatrix.generic(p, q)
        assert pfaffian_from_top_form("commutative", p=p, q=q) == pfaffian_of_anti_alternating(X)


def test_top_form_route_checks():
    for n in (1, 2):
        assert check_top_form_route("uea", n=n)
    for p, q in ((1, 1), (2, 2), (2, 4)):
        assert check_top_form_route("commutative", p=p, q=q)


def test_accumulation_order_does_not_matter():
    # dict-based terms must make sums independent of insertion order
    rng = random.Random(12)
    words = [([1], 1), ([2], 2), ([1, 2], 3), ([-1, 2], 4), ([1, 2, -2, -1], 5)]
    ref = GrassmannElement.zero(2, 2)
    for labels, c in words:
        ref = ref + w(labels, Fraction(c))
    for _ in range(5):
        shuffled = words[:]
        rng.shuffle(shuffled)
        acc = GrassmannElement.zero(2, 2)
        for labels, c in shuffled:
            acc = acc + w(labels, Fraction(c))
        assert acc == ref
