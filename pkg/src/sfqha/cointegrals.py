"""Integrals, cointegrals, symmetrised cointegrals and the coend integral.

Every linear form is obtained by solving its defining linear equations
exactly over the word basis; closed formulas are only used to fix the
overall normalisation and, in the tests, as an independent oracle.
"""

from __future__ import annotations

from collections.abc import Iterable

from gmpy2 import mpq

from .algebra import AlgebraElement, QAlgebra, TensorElement, counit_word
from .errors import SolutionSpaceDimension
from .linalg import RowReducer
from .scalars import ZERO, CycScalar, I
from .structure import (alpha_elem, antipode, beta_elem, canonical_elements, coproduct_word,
                        pivot, pivot_inv, ribbon)


class LinearForm:
    """A linear form on Q(N, beta), stored by its values on the word basis."""

    __slots__ = ("alg", "values", "name")

    def __init__(self, alg: QAlgebra, values: dict, name: str = "form"):
        self.alg = alg
        self.values = {w: v for w, v in values.items() if not v.is_zero()}
        self.name = name

    def on_word(self, w: int) -> CycScalar:
        return self.values.get(w, ZERO)

    def __call__(self, x: AlgebraElement) -> CycScalar:
        total = ZERO
        vals = self.values
        for w, c in x.terms.items():
            v = vals.get(w)
            if v is not None:
                total = total + c * v
        return total

    def scaled(self, c) -> LinearForm:
        c = CycScalar.coerce(c)
        return LinearForm(self.alg, {w: v * c for w, v in self.values.items()}, self.name)

    def precompose_left(self, a: AlgebraElement, name: str | None = None) -> LinearForm:
        """The form h -> self(a h)."""
        alg = self.alg
        vals = {w: self(a * alg.basis(w)) for w in alg.words()}
        return LinearForm(alg, vals, name or self.name)

    def dense(self) -> list[CycScalar]:
        return [self.on_word(w) for w in self.alg.words()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.alg is other.alg and self.values == other.values

    __hash__ = None

    def contract(self, x: TensorElement, leg: int):
        """Apply the form to one leg of a tensor."""
        return x.leg_scalar(leg, self.on_word)

    def to_json(self) -> dict:
        return {self.alg.word_str(w): v.to_json() for w, v in sorted(self.values.items())}

    def __repr__(self) -> str:
        return f"<LinearForm {self.name} on {self.alg!r}, {len(self.values)} nonzero values>"


# -- integral ------------------------------------------------------------------

def integral(alg: QAlgebra, normalized: bool = False) -> AlgebraElement:
    """The two-sided integral sum_m b(m, 1, 1).

    With normalized=True it is rescaled by 2^{N-1} beta^2, which makes the
    modified trace of its action on P0^+ equal to 1.
    """
    total = alg.zero()
    for m in range(4):
        total = total + alg.b(m, alg.mask, alg.mask)
    if normalized:
        total = total * (alg.beta * alg.beta * CycScalar(mpq(2) ** (alg.N - 1)))
    return total


def is_two_sided_integral(c: AlgebraElement) -> bool:
    alg = c.alg
    for w in alg.words():
        h = alg.basis(w)
        want = c * counit_word(alg, w)
        if h * c != want or c * h != want:
            return False
    return True


# -- generic solver --------------------------------------------------------------

def _solve_forms(alg: QAlgebra, words: Iterable[int], unknowns: list[int],
                 tensor_of, contract_leg: int, rhs: AlgebraElement) -> list[dict]:
    """Null space of the system (lam on leg) T(h) = lam(h) rhs, h over words.

    tensor_of(w) returns the 2-tensor T(w); the form is applied to leg
    contract_leg, the free leg is compared with lam(w) * rhs.
    """
    index = {w: i for i, w in enumerate(unknowns)}
    rr = RowReducer()
    free_leg = 1 - contract_leg
    for w in words:
        T = tensor_of(w)
        rows: dict = {}
        for key, c in T.terms.items():
            a, b = key[contract_leg], key[free_leg]
            i = index.get(a)
            if i is None:
                # words outside the unknowns carry the value zero
                continue
            row = rows.setdefault(b, {})
            old = row.get(i)
            row[i] = c if old is None else old + c
        iw = index.get(w)
        if iw is not None:
            for b, c in rhs.terms.items():
                row = rows.setdefault(b, {})
                old = row.get(iw)
                row[iw] = -c if old is None else old - c
        for row in rows.values():
            rr.add(row)
    return [{unknowns[i]: v for i, v in vec.items()} for vec in rr.nullspace(len(unknowns))]


def _one_dim(sols: list[dict], what: str) -> dict:
    if len(sols) != 1:
        raise SolutionSpaceDimension(f"{what}: solution space has dimension {len(sols)}, expected 1")
    return sols[0]


def c_t(alg: QAlgebra) -> CycScalar:
    """Normalisation constant (-1)^N 2^{-N} of the symmetrised cointegral."""
    return CycScalar(mpq((-1) ** alg.N, 2 ** alg.N))


def symmetrised_cointegral_space(alg: QAlgebra, side: str = "right") -> list[dict]:
    can = canonical_elements(alg)
    if side == "right":
        qR, pR = can["qR"], can["pR"]
        return _solve_forms(alg, alg.words(), list(alg.words()),
                            lambda w: qR * coproduct_word(alg, w) * pR, 0, pivot_inv(alg))
    if side == "left":
        qL, pL = can["qL"], can["pL"]
        return _solve_forms(alg, alg.words(), list(alg.words()),
                            lambda w: qL * coproduct_word(alg, w) * pL, 1, pivot(alg))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _normalise_sym(alg: QAlgebra, vec: dict) -> dict:
    # fix the scale by the value on b(m,1,1) for the first odd m with beta^2 + i^m != 0
    b2 = alg.beta * alg.beta
    for m in (1, 3):
        target = c_t(alg) * (b2 + I ** m)
        if target.is_zero():
            continue
        w = alg.word(m, alg.mask, alg.mask)
        have = vec.get(w, ZERO)
        if have.is_zero():
            raise SolutionSpaceDimension("symmetrised cointegral vanishes on the top word")
        scale = target / have
        return {k: v * scale for k, v in vec.items()}
    raise AssertionError("beta^2 + i and beta^2 - i cannot both vanish")


def solve_symmetrised_cointegral(alg: QAlgebra, side: str = "right") -> LinearForm:
    """Solve the symmetrised-cointegral equation; the solution must be unique up to scale."""
    def build():
        vec = _one_dim(symmetrised_cointegral_space(alg, side), f"symmetrised cointegral ({side})")
        return LinearForm(alg, _normalise_sym(alg, vec), f"hat-lambda^{side[0]}")
    return alg.cached(f"symcoint_{side}", build)


# -- cointegrals and the coend integral ----------------------------------------------

def cointegral_space(alg: QAlgebra, side: str = "right") -> list[dict]:
    can = canonical_elements(alg)
    if side == "right":
        Vc, Uc = can["Vcop"], can["Ucop"]
        return _solve_forms(alg, alg.words(), list(alg.words()),
                            lambda w: Vc * coproduct_word(alg, w) * Uc, 0, alg.one())
    if side == "left":
        V, U = can["V"], can["U"]
        return _solve_forms(alg, alg.words(), list(alg.words()),
                            lambda w: V * coproduct_word(alg, w) * U, 1, alg.one())
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def lyubashenko_target(alg: QAlgebra) -> CycScalar:
    """Lambda(b(0,1,1)) = (-1)^N beta^2 2^{-(N-1)} (sign choice nu = 1)."""
    return alg.beta * alg.beta * CycScalar(mpq((-1) ** alg.N * 2, 2 ** alg.N))


def cointegral(alg: QAlgebra, side: str = "right") -> LinearForm:
    """Cointegral normalised through Lambda(h) = lambda^r(S(beta) h).

    The left cointegral is normalised so that its symmetrised form agrees
    with the right one (they coincide since Q is ribbon).
    """
    def build():
        vec = _one_dim(cointegral_space(alg, side), f"cointegral ({side})")
        lam = LinearForm(alg, vec, f"lambda^{side[0]}")
        w0 = alg.b(0, alg.mask, alg.mask)
        if side == "right":
            have = lam(antipode(beta_elem(alg)) * w0)
            scale = lyubashenko_target(alg) / have
        else:
            # hat-lambda^l(h) = lambda^l(g^-1 h) must match hat-lambda^r
            ref = solve_symmetrised_cointegral(alg, "right")
            wt = next(iter(sorted(ref.values)))
            have = lam(pivot_inv(alg) * alg.basis(wt))
            scale = ref.on_word(wt) / have
        return lam.scaled(scale)
    return alg.cached(f"coint_{side}", build)


def lyubashenko_integral(alg: QAlgebra) -> LinearForm:
    """Lambda(h) = lambda^r(S(beta) h)."""
    return alg.cached("Lambda", lambda: cointegral(alg, "right").precompose_left(
        antipode(beta_elem(alg)), "Lambda"))


def cointegral_from_lambda(alg: QAlgebra) -> LinearForm:
    """lambda^r recovered as h -> Lambda(S(q^L_1) h q^L_2)."""
    Lam = lyubashenko_integral(alg)
    qL = canonical_elements(alg)["qL"]
    B = alg.basis
    vals = {}
    for w in alg.words():
        total = ZERO
        for (x1, x2), c in qL.terms.items():
            total = total + c * Lam(antipode(B(x1)) * B(w) * B(x2))
        vals[w] = total
    return LinearForm(alg, vals, "lambda^r via Lambda")


def symmetrised_from_cointegral(alg: QAlgebra, side: str = "right") -> LinearForm:
    """hat-lambda^r(h) = lambda^r(g h), hat-lambda^l(h) = lambda^l(g^-1 h)."""
    lam = cointegral(alg, side)
    a = pivot(alg) if side == "right" else pivot_inv(alg)
    return lam.precompose_left(a, f"hat-lambda^{side[0]} via lambda")


def stabilisation_coefficients(alg: QAlgebra) -> tuple[CycScalar, CycScalar]:
    """(Delta_+, Delta_-) with Delta_+- = lambda^r(S(beta) v^{-+1} alpha)."""
    lam = cointegral(alg, "right")
    sb = antipode(beta_elem(alg))
    a = alpha_elem(alg)
    dp = lam(sb * ribbon(alg, -1) * a)
    dm = lam(sb * ribbon(alg, 1) * a)
    return dp, dm


# -- closed forms (oracles) ------------------------------------------------------------

def symmetrised_cointegral_closed(alg: QAlgebra) -> LinearForm:
    b2 = alg.beta * alg.beta
    vals = {}
    for m in (1, 3):
        vals[alg.word(m, alg.mask, alg.mask)] = c_t(alg) * (b2 + I ** m)
    return LinearForm(alg, vals, "hat-lambda closed form")


def cointegral_closed(alg: QAlgebra) -> LinearForm:
    b2 = alg.beta * alg.beta
    even_N = alg.N % 2 == 0
    vals = {}
    for m in range(4):
        if m % 2 == 0:
            v = b2 + (I ** m if even_N else ZERO)
        else:
            v = ZERO if even_N else I ** m
        vals[alg.word(m, alg.mask, alg.mask)] = c_t(alg) * v
    return LinearForm(alg, vals, "lambda closed form")


def lyubashenko_closed(alg: QAlgebra) -> dict[int, CycScalar]:
    """Lambda on the top words b(m,1,1): nonzero only for m = 0."""
    return {m: (lyubashenko_target(alg) if m == 0 else ZERO) for m in range(4)}


def cointegral_check(alg: QAlgebra, lam: LinearForm, side: str = "right") -> bool:
    """Defining cointegral equation on every basis word."""
    can = canonical_elements(alg)
    one = alg.one()
    for w in alg.words():
        if side == "right":
            T = can["Vcop"] * coproduct_word(alg, w) * can["Ucop"]
            lhs = lam.contract(T, 0)
        else:
            T = can["V"] * coproduct_word(alg, w) * can["U"]
            lhs = lam.contract(T, 1)
        if lhs != one * lam.on_word(w):
            return False
    return True


def symmetrised_check(alg: QAlgebra, lam: LinearForm, side: str = "right") -> bool:
    can = canonical_elements(alg)
    for w in alg.words():
        if side == "right":
            lhs = lam.contract(can["qR"] * coproduct_word(alg, w) * can["pR"], 0)
            rhs = pivot_inv(alg) * lam.on_word(w)
        else:
            lhs = lam.contract(can["qL"] * coproduct_word(alg, w) * can["pL"], 1)
            rhs = pivot(alg) * lam.on_word(w)
        if lhs != rhs:
            return False
    return True


__all__ = [
    "LinearForm", "integral", "is_two_sided_integral", "c_t", "solve_symmetrised_cointegral",
    "symmetrised_cointegral_space", "cointegral_space", "cointegral", "lyubashenko_integral",
    "cointegral_from_lambda", "symmetrised_from_cointegral", "stabilisation_coefficients",
    "symmetrised_cointegral_closed", "cointegral_closed", "lyubashenko_closed",
    "cointegral_check", "symmetrised_check",
]
