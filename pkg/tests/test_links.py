import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sfqha.errors import EvenM, NotInIdeal, NotScalarAction
from sfqha.links import (BLUE_RANGES, character_of_class, expected_hopf, expected_torus,
                         expected_unknot, hopf_invariant, in_blue_range, internal_character,
                         simple_twist, torus_invariant, twist_scalar, unknot_invariant,
                         xi_element)
from sfqha.reps import (SIMPLE_NAMES, MuMatrix, grothendieck_class, p_mu, projective_P0,
                        simple_modules, tensor_rep)
from sfqha.scalars import I, ZERO
from sfqha.traces import is_central, trace_assignment

from helpers import ALL_BETAS, algebra, q

CASES = [(N, k) for N in (1, 2) for k in ALL_BETAS[N]]


def modules(alg):
    mods = dict(simple_modules(alg))
    mods["P0+"] = projective_P0(alg, 1)
    mods["P0-"] = projective_P0(alg, -1)
    return mods


@pytest.fixture(params=CASES, ids=lambda p: f"N{p[0]}k{p[1]}")
def alg(request):
    return algebra(*request.param)


def test_unknot_examples(alg):
    mods = modules(alg)
    cat = trace_assignment(alg, "categorical")
    mod = trace_assignment(alg, "modified")
    assert unknot_invariant(cat, mods["X0+"], 0) == 1
    for eps, name in ((1, "P0+"), (-1, "P0-")):
        for n in (-2, 1, 3):
            assert unknot_invariant(mod, mods[name], n) == q(eps * n ** alg.N, 2) * alg.beta ** -2
    with pytest.raises(NotInIdeal):
        unknot_invariant(mod, mods["X0+"], 1)


def test_twist_scalars(alg):
    S = simple_modules(alg)
    assert twist_scalar(S["X1+"]) == alg.beta ** -1
    assert twist_scalar(S["X1-"]) == -alg.beta ** -1
    assert twist_scalar(S["X0+"]) == 1 == twist_scalar(S["X0-"])
    for u in SIMPLE_NAMES:
        assert twist_scalar(S[u]) == simple_twist(alg, u)
    with pytest.raises(NotScalarAction):
        twist_scalar(projective_P0(alg, 1))


def test_hopf_examples(alg):
    mods = modules(alg)
    mod = trace_assignment(alg, "modified")
    N, binv = alg.N, alg.beta ** -1
    for nu, X in ((1, "X1+"), (-1, "X1-")):
        for rho, U in ((1, "X0+"), (-1, "X0-")):
            for a in (-1, 2):
                assert hopf_invariant(mod, mods[X], a, mods[U], 3) == \
                    q(nu, 2 ** (N + 1)) * (binv * nu) ** a
    for rho, U in ((1, "X1+"), (-1, "X1-")):
        for b in (-2, 1):
            assert hopf_invariant(mod, mods["P0+"], 1, mods[U], b) == \
                q(rho * 2 ** N, 2) * (binv * rho) ** b


def test_internal_characters_central(alg):
    for u in SIMPLE_NAMES:
        assert is_central(internal_character(alg, u))


def test_table_N1_all_cells():
    for k in ALL_BETAS[1]:
        a = algebra(1, k)
        mods = modules(a)
        for regime, labels in (("categorical", ("X0+", "X0-", "X1+", "X1-")),
                               ("modified", ("P0+", "P0-", "X1+", "X1-"))):
            T = trace_assignment(a, regime)
            for L in labels:
                for n in range(-4, 5):
                    assert unknot_invariant(T, mods[L], n) == expected_unknot(a, regime, L, n)
                for m in (-5, -3, -1, 1, 3, 5):
                    assert torus_invariant(T, mods[L], m) == expected_torus(a, regime, L, m)
                for U in SIMPLE_NAMES:
                    for x in (-2, 0, 2):
                        for y in (-1, 1):
                            assert hopf_invariant(T, mods[L], x, mods[U], y) == \
                                expected_hopf(a, regime, L, x, U, y)


def test_xi_even_m_raises(alg):
    with pytest.raises(EvenM):
        xi_element(alg, 2)


def test_xi_central(alg):
    for m in (-3, -1, 1, 3):
        assert is_central(xi_element(alg, m).value)


def test_blue_ranges():
    assert in_blue_range(1, 21) and not in_blue_range(1, 23)
    assert in_blue_range(2, -11) and not in_blue_range(2, 13)
    assert in_blue_range(3, 3) and not in_blue_range(3, 5)
    assert set(BLUE_RANGES) == {1, 2, 3}


# -- relations between the link families -------------------------------------------------------

def test_unknot_equals_torus_at_one(alg):
    mods = modules(alg)
    for regime, labels in (("categorical", ("X0+", "X1-")), ("modified", ("P0+", "X1+"))):
        T = trace_assignment(alg, regime)
        for L in labels:
            for s in (1, -1):
                assert unknot_invariant(T, mods[L], s) == torus_invariant(T, mods[L], s)


def test_hopf_symmetry(alg):
    mods = modules(alg)
    pairs = (("modified", "X1+", "X1-"), ("modified", "X1-", "X1-"),
             ("categorical", "X0+", "X0-"))
    for regime, X, U in pairs:
        T = trace_assignment(alg, regime)
        for a in (-1, 0, 2):
            for b in (-2, 1):
                assert hopf_invariant(T, mods[X], a, mods[U], b) == \
                    hopf_invariant(T, mods[U], b, mods[X], a)


def test_hopf_consistency_with_projective_cover(alg):
    mods = modules(alg)
    T = trace_assignment(alg, "modified")
    for nu in ("P0+", "P0-"):
        for rho in ("X1+", "X1-"):
            for a, b in ((1, -1), (2, 3)):
                lhs = hopf_invariant(T, mods[nu], a, mods[rho], b)
                rhs = hopf_invariant(T, mods[rho], b, mods["X0+"], a) \
                    + hopf_invariant(T, mods[rho], b, mods["X0-"], a)
                assert lhs == rhs * 2 ** (2 * alg.N - 1)


@pytest.mark.parametrize("regime,X,U", [
    ("categorical", "X0-", "X0-"), ("categorical", "X1+", "X0+"),
    ("modified", "X1+", "X0-"), ("modified", "X1-", "X1+"), ("modified", "P0+", "X1-"),
    ("modified", "X1+", "P0+"),
])
def test_unknot_of_tensor_product_equals_hopf(regime, X, U):
    a = algebra(1, 3)
    mods = modules(a)
    T = trace_assignment(a, regime)
    # the left side is a trace on an explicit tensor product; the right side
    # replaces a non-simple U by its composition factors
    lhs = unknot_invariant(T, tensor_rep(mods[X], mods[U]), 1)
    assert lhs == hopf_invariant(T, mods[X], 1, mods[U], 1)


def test_hopf_depends_only_on_class():
    a = algebra(1, 1)
    mods = modules(a)
    T = trace_assignment(a, "modified")
    U1 = tensor_rep(mods["X1+"], mods["X1-"])
    assert grothendieck_class(U1) == grothendieck_class(mods["P0-"])
    for b in (-1, 2):
        assert hopf_invariant(T, mods["X1+"], 1, U1, b) == hopf_invariant(T, mods["X1+"], 1, mods["P0-"], b)
    chi = character_of_class(a, grothendieck_class(mods["P0+"]))
    assert chi == (internal_character(a, "X0+") + internal_character(a, "X0-")) * 2


# -- pullback column ------------------------------------------------------------------------

A2 = algebra(2, 6)
mus = st.builds(MuMatrix.of, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3),
                st.integers(-3, 3))


@settings(max_examples=5)
@given(mus)
def test_pullback_column(mu):
    P = p_mu(A2, mu)
    T = trace_assignment(A2, "pullback")
    d = 1 + mu.det()
    for n in (-1, 2):
        assert unknot_invariant(T, P, n) == d * (2 * n)
    for m in (-3, 1, 3):
        assert torus_invariant(T, P, m) == d * (2 * m)
    S = simple_modules(A2)
    assert hopf_invariant(T, P, 1, S["X1+"], 2) == ZERO
    assert hopf_invariant(T, P, 2, S["X0-"], 1) == d * (-4)


def test_pullback_detects_lambda():
    T = trace_assignment(A2, "pullback")
    vals = [unknot_invariant(T, p_mu(A2, MuMatrix.of(lam, 0, 0, 1)), 1) for lam in (0, 1, 2)]
    assert vals == [2, 4, 6]


def test_mirror_sensitivity():
    T = trace_assignment(A2, "pullback")
    for mu in (MuMatrix.of(1, 0, 0, 1), MuMatrix.of(2, I, 0, 1)):
        P = p_mu(A2, mu)
        for m in (1, 3, 5):
            assert torus_invariant(T, P, m) != torus_invariant(T, P, -m)
    P = p_mu(A2, MuMatrix.of(1, 0, 0, -1))  # 1 + det mu = 0
    assert torus_invariant(T, P, 3) == torus_invariant(T, P, -3) == 0
