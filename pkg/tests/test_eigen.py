import math
import random
from fractions import Fraction

import numpy as np
import pytest

from cdalg import EigenPair, Matrix2, octonions, quaternions
from cdalg.eigen import (
    SingularMatrixError, assoc_eig2x2, associated_quadratic, eig_exists, eig_from_t,
    invert_h_matrix, lmr_matrix, lmr_member, oracle_sigma_min, shift_eigenpair,
    spectrum_from_lmr, spectrum_oracle, spectrum_sample, triangular_spectrum,
    unit_sequence, verify_eigenpair, zero_in_spectrum,
)
from cdalg.poly import CDPoly

H, O = quaternions(), octonions()
Hf, Of = quaternions("f64"), octonions("f64")
i, j, l = O.basis(1), O.basis(2), O.basis(4)
EXAMPLE_B = Matrix2(i, O.one, i * j, j)


def random_matrix(A, rng):
    return Matrix2(*(A.random_element(rng) for _ in range(4)))


def matrix_with_zero_eigenvalue(A, rng):
    """Plant the eigenpair (0, (v1, v2)): a v1 + b v2 = 0 and c v1 + d v2 = 0."""
    v1, v2 = A.random_nonzero(rng), A.random_nonzero(rng)
    b, d = A.random_nonzero(rng), A.random_nonzero(rng)
    a = -((b * v2) * v1.inverse())
    c = -((d * v2) * v1.inverse())
    return Matrix2(a, b, c, d), (v1, v2)


def test_associated_quadratic_sign_convention():
    f = associated_quadratic(EXAMPLE_B)
    assert f == CDPoly(O, [-(i * j), i - j, O.one])


def test_verify_eigenpair_example_vectors():
    assert verify_eigenpair(EXAMPLE_B, O.zero, (-l, i * l))
    assert not verify_eigenpair(EXAMPLE_B, O.zero, (-O.one, i))


def test_verify_identity():
    I = Matrix2.identity(O)
    assert verify_eigenpair(I, O.one, (O.basis(3), O.basis(5)))


def test_verify_rejects_zero_vector():
    with pytest.raises(ValueError):
        verify_eigenpair(EXAMPLE_B, O.zero, (O.zero, O.zero))


def test_triangular_examples():
    assert {p.lam for p in triangular_spectrum(Matrix2(i, O.zero, O.zero, i * j))} == {i, i * j}
    two, three, five = H.scalar(2), H.scalar(3), H.scalar(5)
    assert {p.lam for p in triangular_spectrum(Matrix2(two, H.zero, five, three))} == {two, three}
    assert {p.lam for p in triangular_spectrum(Matrix2.identity(H))} == {H.one}


def test_triangular_pairs_verify(rng):
    for _ in range(20):
        a, c, d = (O.random_nonzero(rng) for _ in range(3))
        B = Matrix2(a, O.zero, c, d)
        for pair in triangular_spectrum(B):
            assert verify_eigenpair(B, pair.lam, pair.v)
            assert spectrum_oracle(B, pair.lam)


def test_triangular_rejects_full_matrix():
    with pytest.raises(ValueError):
        triangular_spectrum(EXAMPLE_B)


def test_shift_eigenpair_example_pair():
    shifted = shift_eigenpair(l, EigenPair(O.zero, (-l, i * l)))
    assert shifted.lam == O.zero
    assert verify_eigenpair(EXAMPLE_B.left_scale(l), shifted.lam, shifted.v)


def test_shift_eigenpair_random(rng):
    for _ in range(100):
        B, v = matrix_with_zero_eigenvalue(O, rng)
        e = O.random_nonzero(rng)
        shifted = shift_eigenpair(e, EigenPair(O.zero, v))
        assert verify_eigenpair(B.left_scale(e), shifted.lam, shifted.v)


def test_shift_by_one_is_identity():
    pair = EigenPair(O.zero, (-l, i * l))
    assert shift_eigenpair(O.one, pair) == pair


def test_shift_by_zero_rejected():
    with pytest.raises(ValueError):
        shift_eigenpair(O.zero, EigenPair(O.zero, (-l, i * l)))


def test_eig_from_t_one_gives_a_plus_b_s():
    B = EXAMPLE_B.to_mode(Of)
    for pair in eig_from_t(B, Of.one):
        s = pair.v[1]
        assert pair.lam.isclose(B.a + B.b * s, 1e-9)
        assert verify_eigenpair(B, pair.lam, pair.v, 1e-8)


def test_eig_from_t_l_reaches_zero():
    pairs = eig_from_t(EXAMPLE_B, l)
    assert any(p.lam.max_abs() < 1e-8 for p in pairs)


def test_eig_from_t_scalar_b_independent_of_t():
    # with b real, a + t((t^-1 b) s) collapses to a + b s whatever t is
    A = Of
    B = Matrix2(A.basis(1), A.scalar(2.0), A.basis(5), A.basis(3))
    for t in [A.one] + unit_sequence(O, 6, seed=3):
        pairs = eig_from_t(B, t)
        assert pairs
        for pair in pairs:
            s = pair.v[1] * pair.v[0].inverse()
            assert pair.lam.isclose(B.a + B.b * s, 1e-8)
            assert verify_eigenpair(B, pair.lam, pair.v, 1e-8)


def test_eig_from_t_errors():
    with pytest.raises(ValueError):
        eig_from_t(EXAMPLE_B, O.zero)
    with pytest.raises(ValueError):
        eig_from_t(Matrix2(i, O.zero, j, O.one), O.one)


def test_eig_exists_cases():
    B = Matrix2(i, O.zero, j, O.one)
    pair = eig_exists(B)
    assert pair.lam == i and verify_eigenpair(B, pair.lam, pair.v)
    ident = eig_exists(Matrix2.identity(O))
    assert ident.lam == O.one


def test_eig_exists_random_first_coordinate_nonzero():
    rng = random.Random(99)
    for _ in range(40):
        B = random_matrix(O, rng)
        if B.b.is_zero():
            continue
        pair = eig_exists(B)
        assert pair.v[0].max_abs() > 0
        smin, smax = oracle_sigma_min(B, pair.lam)
        assert smin <= 1e-8 * max(1.0, smax)


def test_lmr_member_example_points():
    f = associated_quadratic(EXAMPLE_B)
    res = lmr_member(f, -i)
    assert res.member
    u = res.witness
    # witness really annihilates: (u c2) s^2 + (u c1) s + u c0 = 0
    c0, c1, c2 = f.coeffs
    s = -i
    assert ((u * c2) * (s * s) + (u * c1) * s + u * c0).is_zero()
    half = Of.basis(2).scale(0.5) - Of.basis(1).scale(0.5) + Of.basis(4).scale(1 / math.sqrt(2))
    assert lmr_member(f.to_mode(Of), half).member


def test_lmr_matrix_against_direct_evaluation(rng):
    f = associated_quadratic(EXAMPLE_B)
    s = Of.basis(2).scale(0.5) - Of.basis(1).scale(0.5) + Of.basis(4).scale(1 / math.sqrt(2))
    ff = f.to_mode(Of)
    c0, c1, c2 = ff.coeffs
    cols = []
    for k in range(8):
        u = Of.basis(k)
        cols.append(((u * c2) * (s * s) + (u * c1) * s + u * c0).coords)
    direct = np.array(cols).T
    assert np.allclose(direct, np.array(lmr_matrix(ff, s), dtype=float))
    assert abs(np.linalg.det(direct)) < 1e-9


def test_lmr_member_genuine_root_and_scaling(rng):
    lam, a = O.random_element(rng), O.random_element(rng)
    f = CDPoly(O, [-(lam * lam) - a * lam, a, O.one])
    res = lmr_member(f, lam)
    assert res.member
    c0, c1, c2 = f.coeffs
    for u in (res.witness, res.witness.scale(3), res.witness.scale(Fraction(-1, 2))):
        assert ((u * c2) * (lam * lam) + (u * c1) * lam + u * c0).is_zero()


def test_lmr_member_rejects_non_quadratic():
    with pytest.raises(ValueError):
        lmr_member(CDPoly(O, [O.one, O.one]), O.one)


def test_spectrum_from_lmr_membership():
    sp = spectrum_from_lmr(EXAMPLE_B)
    assert sp.contains(O.zero)
    far = O.scalar(5) + O.basis(6)
    assert sp.contains(far) == spectrum_oracle(EXAMPLE_B, far) is False


def test_spectrum_from_lmr_agrees_with_oracle(rng):
    sp = spectrum_from_lmr(EXAMPLE_B.to_mode(Of))
    for lam in spectrum_sample(EXAMPLE_B, samples=16, seed=1):
        assert sp.contains(lam, 1e-7)
        assert spectrum_oracle(EXAMPLE_B.to_mode(Of), lam, 1e-7)


def test_spectrum_from_lmr_needs_scalar_b():
    with pytest.raises(ValueError):
        spectrum_from_lmr(Matrix2(O.one, i, O.one, O.one))


def test_spectrum_sample_is_deterministic():
    a = spectrum_sample(EXAMPLE_B, samples=12, seed=4)
    b = spectrum_sample(EXAMPLE_B, samples=12, seed=4)
    assert [x.coords for x in a] == [x.coords for x in b]
    assert len(a) >= 1


def test_zero_in_spectrum_examples():
    res = zero_in_spectrum(EXAMPLE_B)
    assert res.member and res.witness == l
    assert not zero_in_spectrum(Matrix2(O.one, -i, O.one, i)).member
    assert not zero_in_spectrum(Matrix2(i, O.one, j, O.zero)).member
    assert zero_in_spectrum(Matrix2(i, O.one, O.zero, O.zero)).member


def test_zero_in_spectrum_rejects_b_zero():
    with pytest.raises(ValueError):
        zero_in_spectrum(Matrix2(i, O.zero, j, O.one))


def test_zero_in_spectrum_agrees_with_oracle():
    rng = random.Random(2024)
    planted = 0
    for k in range(100):
        if k % 2:
            B, _ = matrix_with_zero_eigenvalue(O, rng)
            planted += 1
        else:
            B = random_matrix(O, rng)
        if B.b.is_zero():
            continue
        assert zero_in_spectrum(B).member == spectrum_oracle(B, O.zero)
    assert planted == 50


def test_oracle_examples():
    assert spectrum_oracle(EXAMPLE_B, O.zero)
    D = Matrix2(O.basis(1), O.zero, O.zero, O.basis(2))
    assert not spectrum_oracle(D, O.basis(3))
    rng = random.Random(8)
    B = Matrix2(O.random_element(rng), O.zero, O.random_element(rng), O.random_element(rng))
    assert spectrum_oracle(B, B.a)


def test_assoc_examples():
    sp = assoc_eig2x2(Matrix2(H.basis(1), H.zero, H.one, H.basis(2)))
    assert sp.points == [H.basis(1), H.basis(2)]
    rot = Matrix2(H.zero, H.one, -H.one, H.zero)
    sp = assoc_eig2x2(rot)
    assert not sp.is_finite() and len(sp.spheres) == 1
    t, n = sp.spheres[0]
    assert abs(t) < 1e-9 and abs(n - 1) < 1e-9
    for lam in sp.sample():
        assert spectrum_oracle(rot.to_mode(Hf), lam, 1e-8)


def test_assoc_rejects_octonions():
    with pytest.raises(ValueError):
        assoc_eig2x2(EXAMPLE_B)


def test_invert_example_matrix():
    half = Fraction(-1, 2)
    expected = Matrix2(i.scale(half), (i * j).scale(half), O.scalar(-half), j.scale(half))
    inv = invert_h_matrix(EXAMPLE_B)
    assert inv == expected
    assert EXAMPLE_B @ inv == inv @ EXAMPLE_B == Matrix2.identity(O)


def test_invert_identity_and_singular():
    assert invert_h_matrix(Matrix2.identity(H)) == Matrix2.identity(H)
    e1 = H.basis(1)
    with pytest.raises(SingularMatrixError):
        invert_h_matrix(Matrix2(e1, H.one, e1, H.one))


def test_example_factorization():
    left = Matrix2(i, O.zero, O.zero, i * j)
    right = Matrix2(O.one, -i, O.one, i)
    assert left @ right == EXAMPLE_B
    assert not spectrum_oracle(left, O.zero) and not spectrum_oracle(right, O.zero)
