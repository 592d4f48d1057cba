import pytest

from sfqha.algebra import e0, e1
from sfqha.cointegrals import (c_t, cointegral, cointegral_check, cointegral_closed,
                               cointegral_from_lambda, integral, lyubashenko_integral,
                               lyubashenko_target, solve_symmetrised_cointegral,
                               stabilisation_coefficients, symmetrised_check,
                               symmetrised_cointegral_closed, symmetrised_cointegral_space)
from sfqha.scalars import I, ZERO
from sfqha.structure import antipode, beta_elem, e0_pm, e1_pm, ribbon
from sfqha.subalgebra import (subalgebra_A, symmetrised_cointegral_A,
                              symmetrised_cointegral_A_closed, symmetrised_cointegral_A_space)

from helpers import ALL_BETAS, algebra, q

CASES = [(N, k) for N in (1, 2) for k in ALL_BETAS[N]]


@pytest.fixture(params=CASES, ids=lambda p: f"N{p[0]}k{p[1]}")
def alg(request):
    return algebra(*request.param)


def test_integral_N1():
    a = algebra(1, 1)
    expected = a.zero()
    for m in range(4):
        expected = expected + a.K(m) * a.fp(1) * a.fm(1)
    assert integral(a) == expected
    assert a.K() * integral(a) == integral(a)
    assert (a.fp(1) * integral(a)).is_zero()


def test_symmetrised_cointegral_values(alg):
    lam = solve_symmetrised_cointegral(alg, "right")
    b2 = alg.beta ** 2
    for m in range(4):
        want = c_t(alg) * (b2 + I ** m) if m % 2 else ZERO
        assert lam(alg.b(m, alg.mask, alg.mask)) == want
    assert lam(alg.one()) == ZERO
    assert lam == symmetrised_cointegral_closed(alg)


def test_symmetrised_cointegral_spaces_one_dimensional(alg):
    for side in ("right", "left"):
        assert len(symmetrised_cointegral_space(alg, side)) == 1
        assert symmetrised_check(alg, solve_symmetrised_cointegral(alg, side), side)


def test_stabilisation_coefficients(alg):
    dp, dm = stabilisation_coefficients(alg)
    assert dp == alg.beta ** -2 and dm == alg.beta ** 2
    assert dp * dm == 1
    # recomputed from the closed-form cointegral
    lam = cointegral_closed(alg)
    sb = antipode(beta_elem(alg))
    assert lam(sb * ribbon(alg, -1)) == dp
    assert lam(sb * ribbon(alg, 1)) == dm


def test_lyubashenko_integral(alg):
    Lam = lyubashenko_integral(alg)
    target = q((-1) ** alg.N, 2 ** (alg.N - 1)) * alg.beta ** 2
    assert lyubashenko_target(alg) == target
    assert Lam(alg.b(0, alg.mask, alg.mask)) == target
    assert Lam(alg.b(1, alg.mask, alg.mask)) == ZERO


def test_cointegral_equations_and_round_trip(alg):
    for side in ("right", "left"):
        assert cointegral_check(alg, cointegral(alg, side), side)
    assert cointegral(alg, "right") == cointegral_closed(alg)
    assert cointegral_from_lambda(alg) == cointegral(alg, "right")


def test_ribbon_on_e1(alg):
    for sign in (1, -1):
        for p in (1, -1):
            assert ribbon(alg, p) * e1_pm(alg, sign) == e1_pm(alg, sign) * (alg.beta ** p * sign)


def test_e_idempotents_complete(alg):
    assert e0_pm(alg, 1) + e0_pm(alg, -1) == e0(alg)
    assert e1_pm(alg, 1) + e1_pm(alg, -1) == e1(alg)


@pytest.mark.parametrize("k", [0, 2, 4, 6])
def test_subalgebra_symmetrised_cointegrals(k):
    a = algebra(2, k)
    A = subalgebra_A(a)
    b2 = a.beta ** 2
    lam_r = symmetrised_cointegral_A(A, "right")
    lam_l = symmetrised_cointegral_A(A, "left")
    for side in ("right", "left"):
        assert len(symmetrised_cointegral_A_space(A, side)) == 1
    assert lam_r == symmetrised_cointegral_A_closed(A, "right")
    assert lam_l == symmetrised_cointegral_A_closed(A, "left")
    top1 = a.fp(1) * a.fm(1)
    assert lam_r(top1 * a.K()) == 1
    assert lam_r(top1 * a.K(3)) == -I * b2
    assert lam_l(top1 * a.K(3)) == I * b2
    assert lam_r(e0_pm(a, 1) * top1) == (1 - I * b2) * q(1, 4)
