from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from sfqha.algebra import e0, pair_product, top
from sfqha.cointegrals import integral, lyubashenko_closed, solve_symmetrised_cointegral
from sfqha.errors import NotCentral, NotCoprime
from sfqha.lens import (ALPHA_JL, ContinuedFraction, F_dressed, F_of, alpha_jl, alpha_t,
                        appendix_chain, cf_expand, cf_value, coefficients, compute_center,
                        expected_modified_alpha_t, expected_modified_phi_p0,
                        expected_modified_phi_x1, expected_pullback, f_hat, f_hat_direct,
                        lens_invariant, lens_word, linking_matrix, lk_det, lk_signature,
                        lyu_lens, named_alpha, partial_values, phi_element, phi_one_identity,
                        recover_mu, st_on_ZP, st_on_Zev, surgery_coefficient, zeta,
                        zeta_circ_closed, zp_element)
from sfqha.reps import MuMatrix, p_mu, projective_P0, simple_modules
from sfqha.scalars import I, ONE, ZERO, CycScalar
from sfqha.structure import ribbon
from sfqha.traces import modified_trace, trace_assignment

from helpers import ALL_BETAS, algebra, coprime_pairs, q

PQ = [(2, 1), (3, 1), (3, 2), (5, 2), (7, 3), (12, 5)]
CASES = [(N, k) for N in (1, 2) for k in ALL_BETAS[N]]


@pytest.fixture(params=CASES, ids=lambda p: f"N{p[0]}k{p[1]}")
def alg(request):
    return algebra(*request.param)


# -- continued fractions and linking matrices -----------------------------------------------------

def brute_force_expansion(p, q):
    """All sequences with entries >= 2 and length <= 4 whose value is p/q."""
    target = Fraction(p, q)
    hits = []
    for n in range(1, 5):
        for a in product(range(2, p + 2), repeat=n):
            if all(v > 0 for v in partial_values(a)) and cf_value(a) == target:
                hits.append(a)
    return hits


@pytest.mark.parametrize("p,q", [(5, 2), (7, 3), (3, 2), (12, 5), (8, 3)])
def test_expansion_matches_brute_force(p, q):
    assert brute_force_expansion(p, q) == [cf_expand(p, q).a]


def test_expansion_examples():
    assert cf_expand(5, 2).a == (2, 3)
    assert cf_value((2, 3)) == Fraction(5, 2)
    assert cf_expand(7, 3).a == (2, 2, 3)
    for p in (2, 3, 9):
        assert cf_expand(p, 1).a == (p,)
    with pytest.raises(NotCoprime):
        cf_expand(6, 4)


def test_from_sequence_validates():
    cf = ContinuedFraction.from_sequence((2, 3))
    assert (cf.p, cf.q) == (5, 2)
    with pytest.raises(ValueError):
        ContinuedFraction.from_sequence((1, 1))


@pytest.mark.parametrize("a,det,sig", [((2, 3), 5, 2), ((2, 2, 3), 7, 3), ((5,), 5, 1)])
def test_linking_matrix_examples(a, det, sig):
    assert lk_det(a) == det
    assert lk_signature(a) == sig


@settings(max_examples=60)
@given(coprime_pairs(60))
def test_linking_matrix_against_oracles(pq):
    cf = cf_expand(*pq)
    m = linking_matrix(cf.a)
    assert sympy.Matrix(m).det() == cf.p == lk_det(cf.a)
    eig = np.linalg.eigvalsh(np.array(m, dtype=float))
    assert int((eig > 0).sum()) - int((eig < 0).sum()) == lk_signature(cf.a) == cf.n
    assert appendix_chain(cf.a)
    assert cf_value(cf.a) == Fraction(*pq)


def test_lens_word_order():
    assert lens_word((2, 3)) == ["S", ("T", 2), "S", ("T", 3)]


# -- centre ---------------------------------------------------------------------------------------

def test_centre_dimensions():
    for N, d in ((1, 5), (2, 11)):
        assert compute_center(algebra(N, ALL_BETAS[N][0])).dimension == d == 3 + 2 ** (2 * N - 1)


def test_centre_elements(alg):
    from sfqha.traces import is_central
    assert is_central(e0(alg) * alg.fp(1) * alg.fm(1))
    assert phi_one_identity(alg)
    for label in ("X0+", "X0-", "X1+", "X1-", "P0+", "1"):
        assert is_central(phi_element(alg, label))
    # phi_P0 is the Grothendieck sum of the two trivial characters
    assert phi_element(alg, "P0+") == (phi_element(alg, "X0+") + phi_element(alg, "X0-")) \
        * 2 ** (2 * alg.N - 1)
    assert phi_element(alg, "X0+") == phi_element(alg, "1")


def test_T_action_on_ZP(alg):
    c = [ONE, q(2), q(-3, 5)]
    binv = alg.beta ** -1
    assert st_on_ZP(alg, c, [("T", 1)]) == [c[0], binv * c[1], -binv * c[2]]


def test_T_action_is_inverse_ribbon(alg):
    vec = [q(1, 3), q(-2), I]
    z = zp_element(alg, vec)
    assert zp_element(alg, st_on_ZP(alg, vec, [("T", 1)])) == ribbon(alg, -1) * z
    zev = e0(alg) * (alg.one() + pair_product(alg, 1) * 3)
    assert st_on_Zev(alg, zev, [("T", 1)]) == ribbon(alg, -1) * zev


@pytest.mark.parametrize("b", [1, 2, -3])
def test_TS_on_top(alg, b):
    N, b2 = alg.N, alg.beta ** 2
    got = st_on_Zev(alg, e0(alg) * top(alg), ["S", ("T", b)])
    want = e0(alg) * b2 * q((-1) ** N, 2 ** N)
    for j in range(1, N + 1):
        want = want * (e0(alg) + e0(alg) * alg.fp(j) * alg.fm(j) * (2 * b))
    assert got == want


# -- f(a)^ and its coefficients -------------------------------------------------------------

def test_f_hat_two_routes(alg):
    for p, qq in PQ:
        cf = cf_expand(p, qq)
        assert f_hat(alg, cf) == f_hat_direct(alg, cf)


def test_extended_coefficients_for_two_over_one(alg):
    cf = cf_expand(2, 1)
    c = coefficients(alg, cf, extend=True)[2]
    assert c.c0 == alg.beta ** -2 and c.cp == ZERO and c.cm == ZERO
    # the extension is one more S applied to the Z_P coordinates
    direct = st_on_ZP(alg, [ONE, ZERO, ZERO], lens_word(cf.a) + ["S"])
    assert direct == c.as_list()


def test_c0_values_are_beta_powers(alg):
    powers = {alg.beta ** j for j in range(8)}
    for p, qq in PQ:
        for c in coefficients(alg, cf_expand(p, qq), extend=True):
            assert c.c0.is_zero() or c.c0 in powers


def test_lambda_pairing_with_f_hat(alg):
    from sfqha.cointegrals import lyubashenko_integral
    Lam = lyubashenko_integral(alg)
    for p, qq in PQ:
        cf = cf_expand(p, qq)
        assert Lam(f_hat(alg, cf)) == alg.beta ** (6 * cf.n) * p ** alg.N


def test_zeta_star_three_over_one():
    a = algebra(2, 2)
    cf = cf_expand(3, 1)
    # Lambda only sees the b(0,1,1) coordinate; read it off the direct ST route
    fa = f_hat_direct(a, cf)
    lam = lyubashenko_closed(a)
    expected = sum((fa.coeff(a.word(m, a.mask, a.mask)) * v for m, v in lam.items()), ZERO)
    assert zeta(a, "star", cf) == a.one() * expected
    assert expected == a.beta ** 6 * 9


# -- F and zeta -------------------------------------------------------------------------------

def test_F_lemma(alg):
    N, b2 = alg.N, alg.beta ** 2
    pP, pX, mX = (phi_element(alg, x) for x in ("P0+", "X1+", "X1-"))
    assert F_of(pP) == (pX - mX) * 2 ** (N - 1)
    for s, ph in ((1, pX), (-1, mX)):
        assert F_of(ph) == pP * q(s, 2 ** N) + (pX + mX) * q(1, 2)
    full = (1 << N) - 1
    for s in range(1 << N):
        k = bin(s).count("1")
        assert F_of(e0(alg) * pair_product(alg, s)) == \
            e0(alg) * pair_product(alg, full ^ s) * (b2 * q((-1) ** k * 2 ** N, 4 ** k))
    with pytest.raises(NotCentral):
        F_of(alg.fp(1))


def test_F_dressed_routes_agree():
    for N, k in ((1, 3), (2, 0)):
        a = algebra(N, k)
        for z in (f_hat(a, cf_expand(5, 2)), phi_element(a, "X1-"), e0(a)):
            f0 = F_of(z)
            assert F_dressed(z, "S") == f0 == F_dressed(z, "Sinv")


def test_zeta_circ_closed_form(alg):
    for p, qq in PQ:
        cf = cf_expand(p, qq)
        assert zeta(alg, "circ", cf) == zeta_circ_closed(alg, cf)


# -- invariants --------------------------------------------------------------------------------

def test_lyubashenko_invariant(alg):
    for p, qq in PQ:
        assert lyu_lens(alg, p, qq) == p ** alg.N
    assert lyu_lens(alg, 5, 2) == lyu_lens(alg, 5, 3)


def test_lyu_examples():
    assert lyu_lens(algebra(2, 0), 2, 1) == 4
    assert lyu_lens(algebra(1, 1), 7, 3) == 7


def test_lyu_via_categorical_star_route(alg):
    T = trace_assignment(alg, "categorical")
    X = simple_modules(alg)["X0+"]
    for p, qq in PQ[:4]:
        assert lens_invariant("star", alg.one(), X, T, p, qq) == lyu_lens(alg, p, qq)


def test_surgery_coefficient(alg):
    for p, qq in PQ:
        cf = cf_expand(p, qq)
        assert surgery_coefficient(alg, cf) == alg.beta ** (2 * cf.n)


def test_modified_theorem(alg):
    T = trace_assignment(alg, "modified")
    S = simple_modules(alg)
    for p, qq in PQ:
        cf = cf_expand(p, qq)
        for sign in (1, -1):
            P = projective_P0(alg, sign)
            for t in range(1 << alg.N):
                assert lens_invariant("circ", alpha_t(alg, t), P, T, cf) == \
                    expected_modified_alpha_t(alg, cf, t, sign)
            assert lens_invariant("circ", phi_element(alg, "P0+"), P, T, cf) == \
                expected_modified_phi_p0(alg, cf)
            X = "X1+" if sign > 0 else "X1-"
            assert lens_invariant("circ", phi_element(alg, X), S[X], T, cf) == \
                expected_modified_phi_x1(alg, cf, sign)


def test_modified_example_with_independent_route(alg):
    # (2,1) with alpha = 1 on P0+: recomputed with the direct ST action,
    # the associator-dressed F and a generic splitting trace
    cf = cf_expand(2, 1)
    P = projective_P0(alg, 1)
    z = F_dressed(f_hat_direct(alg, cf), "Sinv")
    form = solve_symmetrised_cointegral(alg, "right")
    value = alg.beta ** 2 * modified_trace(form, P, P.act(z))
    b2 = alg.beta ** 2
    assert value == q(1, 2) + b2 * q(1, 2)
    assert lens_invariant("circ", alg.one(), P, trace_assignment(alg, "modified"), cf) == value


def test_sanity_identity(alg):
    T = trace_assignment(alg, "modified")
    P = projective_P0(alg, 1)
    c = integral(alg, normalized=True)
    assert T.trace_of(P, c) == 1
    assert c == named_alpha(alg, "integral")
    for p, qq in PQ:
        assert lens_invariant("star", c, P, T, p, qq) == p ** alg.N
        assert lens_invariant("circ", c, P, T, p, qq) == p ** alg.N


def test_renormalised_invariant_not_invariant_under_q_shift():
    a = algebra(2, 0)
    T = trace_assignment(a, "modified")
    P = projective_P0(a, 1)
    for p, qq in ((2, 1), (3, 2), (5, 2)):
        assert lens_invariant("circ", a.one(), P, T, p, qq) != \
            lens_invariant("circ", a.one(), P, T, p, qq + p)
        assert lyu_lens(a, p, qq) == lyu_lens(a, p, qq + p)


# -- pullback theorem -------------------------------------------------------------------------

PULLBACK_LABELS = ["e0", "t:10", "t:01", "t:11", "phi:P0+", "phi:X1+", "phi:X1-",
                   "e0f1+f2+", "e0f1+f2-", "e0f1-f2+", "e0f1-f2-"]


@pytest.mark.parametrize("mu", [MuMatrix.of(1, 0, 0, 1), MuMatrix.of(0, 0, 0, 0),
                                MuMatrix.of(2, 3, I, q(1, 2))], ids=["id", "zero", "generic"])
def test_pullback_theorem(mu):
    a = algebra(2, 2)
    T = trace_assignment(a, "pullback")
    P = p_mu(a, mu)
    for p, qq in PQ[:4]:
        cf = cf_expand(p, qq)
        for label in PULLBACK_LABELS:
            assert lens_invariant("circ", named_alpha(a, label), P, T, cf) == \
                expected_pullback(cf, mu, label)
        vals = {jl: lens_invariant("circ", alpha_jl(a, *jl), P, T, cf) / CycScalar(p * p)
                for jl in ALPHA_JL}
        assert recover_mu(vals) == mu


def test_pullback_example():
    a = algebra(2, 0)
    T = trace_assignment(a, "pullback")
    P = p_mu(a, MuMatrix.of(1, 0, 0, 1))
    assert lens_invariant("circ", e0(a), P, T, 3, 2) == -24


def test_named_alpha_rejects_unknown():
    with pytest.raises(ValueError):
        named_alpha(algebra(1, 1), "nope")
