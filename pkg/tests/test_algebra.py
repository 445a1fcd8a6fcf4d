import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdalg import algebra as alg
from cdalg.algebra import (
    Algebra, Element, bilinear, identity_report, is_zero_divisor, left_mul_op,
    make_algebra, octonions, quaternions, right_mul_op, sedenions, solve_left,
    standard_algebra,
)
from conftest import cd_product, elements, nonzero_elements

H, O, S = quaternions(), octonions(), sedenions()


def hamilton(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]


def test_dimensions():
    assert [standard_algebra(m).dim for m in range(5)] == [1, 2, 4, 8, 16]
    assert make_algebra((-1, 2)).dim == 4


def test_quaternion_units():
    i, j, k = H.basis(1), H.basis(2), H.basis(3)
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k
    assert i * i == j * j == k * k == H.scalar(-1)


@given(elements(H), elements(H))
def test_quaternions_match_hamilton(x, y):
    assert list((x * y).coords) == hamilton(x.coords, y.coords)


@pytest.mark.parametrize("depth", [3, 4, 5])
def test_table_matches_recursive_product(depth):
    A = standard_algebra(depth)
    rng = random.Random(depth)
    for _ in range(20):
        x, y = A.random_element(rng), A.random_element(rng)
        assert list((x * y).coords) == cd_product(list(x.coords), list(y.coords), A.gammas)


def test_split_gammas_match_recursive_product():
    A = make_algebra((-1, 3, Fraction(1, 2)))
    rng = random.Random(0)
    for _ in range(20):
        x, y = A.random_element(rng), A.random_element(rng)
        assert list((x * y).coords) == cd_product(list(x.coords), list(y.coords), A.gammas)


def test_basis_products_are_signed_basis():
    table = alg.multiplication_table(S.gammas)
    for i in range(16):
        for j in range(16):
            assert table[i][j] in (1, -1)
            prod = S.basis(i) * S.basis(j)
            assert prod == S.basis(i ^ j).scale(table[i][j])


def test_sedenion_zero_divisors():
    a = S.basis(1) + S.basis(10)
    b = S.basis(7) + S.basis(12)
    assert (a * b).is_zero() and (b * a).is_zero()
    assert a.norm() == b.norm() == 2
    assert (a * b).norm() == 0 != a.norm() * b.norm()
    assert is_zero_divisor(a) and is_zero_divisor(b)


def test_octonions_have_no_zero_divisors(rng):
    for _ in range(50):
        assert not is_zero_divisor(O.random_nonzero(rng))


def test_zero_divisor_pairs_contains_canonical_pair():
    a = S.basis(1) + S.basis(10)
    b = S.basis(7) + S.basis(12)
    pairs = alg.zero_divisor_pairs(S)
    assert (a, b) in pairs
    assert alg.zero_divisor_pairs(O) == []


def test_tampered_table_trips_convention_check(monkeypatch):
    good = alg.multiplication_table((-1,) * 4)
    rows = [list(r) for r in good]
    rows[1][12] = -rows[1][12]
    bad = tuple(tuple(r) for r in rows)
    monkeypatch.setattr(alg, "multiplication_table", lambda gammas: bad)
    with pytest.raises(RuntimeError, match="convention"):
        sedenions()


def test_zero_is_not_a_zero_divisor_candidate():
    with pytest.raises(ValueError):
        is_zero_divisor(S.zero)


def test_zero_gamma_rejected():
    with pytest.raises(ValueError):
        make_algebra((-1, 0))


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        Algebra((-1,), "decimal")


def test_mixed_algebras_rejected():
    with pytest.raises(ValueError):
        H.basis(1) + O.basis(1)


def test_elements_are_immutable():
    x = H.basis(1)
    with pytest.raises(AttributeError):
        x.coords = (0, 0, 0, 0)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        O.zero.inverse()


def test_rational_inverse_is_exact():
    x = O.element([1, 2, 0, 0, 0, 0, 0, 3])
    assert x.inverse() == O.element([Fraction(1, 14), Fraction(-2, 14), 0, 0, 0, 0, 0, Fraction(-3, 14)])
    assert x * x.inverse() == O.one


def test_float_mode_isclose():
    Of = octonions("f64")
    x = Of.element([0.1] * 8)
    assert (x * x.inverse()).isclose(Of.one)


def test_solve_left_octonion(rng):
    for _ in range(20):
        a, b = O.random_nonzero(rng), O.random_element(rng)
        x = solve_left(a, b)
        assert a * x == b


def test_solve_left_quaternion_units():
    # i x = j is solved by x = -k
    assert solve_left(H.basis(1), H.basis(2)) == -H.basis(3)


def test_solve_left_sedenion_has_no_solution():
    a = S.basis(1) + S.basis(10)
    b = S.basis(7) + S.basis(12)
    assert solve_left(a, b) is None


def test_solve_left_rejects_zero():
    with pytest.raises(ValueError):
        solve_left(O.zero, O.one)


def test_linear_operators_match_products(rng):
    a = O.random_element(rng)
    y = O.random_element(rng)
    assert Element(O, left_mul_op(a).apply(y.coords)) == a * y
    assert Element(O, right_mul_op(a).apply(y.coords)) == y * a


def test_left_mul_rank_drops_for_zero_divisor():
    a = S.basis(1) + S.basis(10)
    assert left_mul_op(a).rank() == 12
    assert left_mul_op(S.basis(3)).rank() == 16


def test_linear_operator_float_against_numpy():
    Of = octonions("f64")
    a = Of.element(np.linspace(-1, 1, 8).tolist())
    m = np.array(left_mul_op(a).matrix, dtype=float)
    assert np.allclose(m.T @ m, a.norm() * np.eye(8))


def test_format_element():
    assert str(O.element([2, 0, 0, -1, 0, 0, 0, Fraction(1, 2)])) == "2-e3+1/2*e7"
    assert str(O.zero) == "0"
    assert str(O.basis(5)) == "e5"


def test_power_and_scalar_division():
    x = H.element([1, 1, 0, 0])
    assert x ** 0 == H.one
    assert x ** 3 == x * x * x
    assert (x / 2).coords == (Fraction(1, 2), Fraction(1, 2), 0, 0)


# -- invariants over all depths ------------------------------------------------------


@pytest.mark.parametrize("depth", range(5))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_conjugation_is_an_involutive_antiautomorphism(depth, data):
    A = standard_algebra(depth)
    x, y = data.draw(elements(A)), data.draw(elements(A))
    assert x.conj().conj() == x
    assert (x * y).conj() == y.conj() * x.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@pytest.mark.parametrize("depth", range(5))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_quadratic_relation(depth, data):
    A = standard_algebra(depth)
    x = data.draw(elements(A))
    assert x * x - x.scale(x.trace()) + A.scalar(x.norm()) == A.zero
    assert x * x.conj() == x.conj() * x == A.scalar(x.norm())


@pytest.mark.parametrize("depth", range(5))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_bilinear_identities(depth, data):
    A = standard_algebra(depth)
    x, y, z = (data.draw(elements(A)) for _ in range(3))
    assert bilinear(x, x) == x.norm()
    assert bilinear(x, y * z) == bilinear(x * z.conj(), y) == bilinear(y.conj() * x, z)


@pytest.mark.parametrize("depth", range(5))
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_flexible_and_power_associative(depth, data):
    A = standard_algebra(depth)
    x, y = data.draw(elements(A)), data.draw(elements(A))
    assert (x * y) * x == x * (y * x)
    assert (x * x) * x == x * (x * x)
    assert (x * x) * (x * x) == ((x * x) * x) * x


@settings(max_examples=60, deadline=None)
@given(nonzero_elements(O), elements(O), elements(O))
def test_octonion_moufang_and_inverse(x, y, z):
    assert (x * y) * (z * x) == (x * (y * z)) * x
    assert x * (x * y) == (x * x) * y
    xi = x.inverse()
    assert x * ((xi * y) * z) == (y * (z * x)) * xi
    assert (x * y).norm() == x.norm() * y.norm()


# -- identity report -------------------------------------------------------------


def test_identity_report_octonions_all_pass():
    rep = identity_report(O, trials=100, seed=3)
    assert all(r.passed for r in rep.results.values())
    assert rep["inverse_moufang"].checked > 0


def test_identity_report_sedenion_failures_have_witnesses():
    rep = identity_report(S, trials=100, seed=3)
    for name in ("left_alternative", "right_alternative", "norm_multiplicative"):
        assert not rep[name].passed
        assert rep[name].witness is not None
    assert rep["power_associative"].passed
    assert rep["flexible"].passed
    a, b, _ = rep["norm_multiplicative"].witness
    assert (a * b).norm() != a.norm() * b.norm()


def test_identity_report_quaternions_associative():
    rep = identity_report(H, trials=50)
    assert all(r.passed for r in rep.results.values())
    assert rep.to_dict()["trials"] == 50


def test_identity_report_rejects_zero_trials():
    with pytest.raises(ValueError):
        identity_report(O, trials=0)
