import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sfqha.algebra import AlgebraElement, e0, e1, multiply, omega, top
from sfqha.axioms import perturbed_r_matrix, verify_axioms
from sfqha.cointegrals import integral, is_two_sided_integral
from sfqha.errors import AlgebraMismatch, ArityMismatch
from sfqha.scalars import I, ONE, CycScalar
from sfqha.structure import (antipode, antipode_inv, apply_leg, beta_pm, canonical_elements,
                             coassociator, coproduct, counit, monodromy, monodromy_closed_form,
                             pivot, r_matrix, r_matrix_inv, ribbon, ribbon_closed_form,
                             ribbon_iterated)
from sfqha.subalgebra import closure_report, subalgebra_A

from helpers import algebra, elements


@pytest.fixture(params=[(1, 1), (2, 2)], ids=lambda p: f"N{p[0]}k{p[1]}")
def alg(request):
    return algebra(*request.param)


def test_dimension():
    for N in (1, 2, 3, 4, 5):
        a = algebra(N, N % 2)
        assert a.dim == 2 ** (2 * N + 2) == len(a.words())


def test_fermion_anticommutator_is_e1(alg):
    f, g = alg.fp(1), alg.fm(1)
    assert f * g + g * f == e1(alg)
    assert e1(alg) == (alg.one() - alg.K(2)) * CycScalar("1/2")


def test_K_to_the_fourth(alg):
    K = alg.K()
    assert K * K * K * K == alg.one()


def test_fermions_square_to_zero(alg):
    assert (alg.fp(1) * alg.fp(1)).is_zero()
    assert (alg.fm(1) * alg.fm(1)).is_zero()


def test_cross_relations():
    a = algebra(2, 0)
    for s1 in (1, -1):
        for s2 in (1, -1):
            x, y = a.f(s1, 1), a.f(s2, 2)
            assert x * y + y * x == a.zero()
        x = a.f(s1, 1)
        assert x * a.K() + a.K() * x == a.zero()


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        multiply(algebra(1, 1).one(), algebra(1, 3).one())


@settings(max_examples=25)
@given(st.data())
def test_product_associative_and_unital(data):
    a = algebra(*data.draw(st.sampled_from([(1, 1), (2, 0)])))
    x, y, z = (data.draw(elements(a)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * a.one() == x == a.one() * x
    assert x * (y + z) == x * y + x * z


@settings(max_examples=25)
@given(st.data())
def test_coproduct_and_antipode_are_morphisms(data):
    a = algebra(1, data.draw(st.sampled_from([1, 3, 5, 7])))
    x, y = data.draw(elements(a)), data.draw(elements(a))
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
    assert antipode(x * y) == antipode(y) * antipode(x)
    assert antipode(antipode_inv(x)) == x == antipode_inv(antipode(x))
    assert counit(x * y) == counit(x) * counit(y)


def test_coproduct_examples(alg):
    assert coproduct(alg.fp(1)) == alg.otimes(alg.fp(1), alg.one()) \
        + alg.otimes(omega(alg, 1), alg.fp(1))
    assert coproduct(alg.one()) == alg.tensor_one(2)
    assert counit(alg.one()) == ONE


def test_antipode_of_K(alg):
    sign = (-1) ** alg.N
    assert antipode(alg.K()) == (e0(alg) + e1(alg) * sign) * alg.K()


def test_tensor_unit_and_counit_leg(alg):
    Phi = coassociator(alg)
    assert alg.tensor_one(3) * Phi == Phi
    KK = alg.otimes(alg.K(), alg.K())
    assert apply_leg(KK, 1, "eps") == alg.K()
    with pytest.raises(ArityMismatch):
        apply_leg(KK, 2, "eps")


def test_qR_closed_form(alg):
    qR = canonical_elements(alg)["qR"]
    assert qR == alg.tensor_one(2) + alg.otimes(e1(alg), e1(alg) * (beta_pm(alg, 1) - alg.one()))


def test_ribbon_inverse_and_powers(alg):
    assert ribbon(alg, 1) * ribbon(alg, -1) == alg.one()
    for m in range(-5, 6):
        assert ribbon_closed_form(alg, m) == ribbon_iterated(alg, m)


def test_monodromy_matches_basis_expansion(alg):
    assert monodromy(alg) == monodromy_closed_form(alg)
    assert monodromy(alg) == r_matrix(alg).swap() * r_matrix(alg)


def test_pivot_squares_antipode(alg):
    g = pivot(alg)
    for x in alg.generators():
        assert antipode(antipode(x)) * g == g * x


def test_integral(alg):
    c = integral(alg)
    assert is_two_sided_integral(c)
    assert c == sum((alg.b(m, alg.mask, alg.mask) for m in range(4)), alg.zero())


def test_top_is_pair_product(alg):
    t = alg.one()
    for j in range(1, alg.N + 1):
        t = t * alg.fp(j) * alg.fm(j)
    assert top(alg) == t


@pytest.mark.parametrize("k", [1, 3, 5, 7])
def test_axioms_N1(k):
    rep = verify_axioms(algebra(1, k))
    assert rep.ok, rep.failures


def test_axioms_detect_perturbed_r_matrix():
    a = algebra(1, 1)
    R, Rinv = perturbed_r_matrix(a)
    rep = verify_axioms(a, R=R, R_inv=Rinv)
    assert not rep.ok


@pytest.mark.parametrize("k", [0, 2, 4, 6])
def test_subalgebra_A_closure(k):
    A = subalgebra_A(algebra(2, k))
    report = closure_report(A)
    assert all(report.values()), report
    assert len({A.word(m, a, b) for m in range(4) for a in (0, 1) for b in (0, 1)}) == 16
