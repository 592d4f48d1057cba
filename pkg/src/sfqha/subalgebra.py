"""The 16-dimensional quasi-Hopf subalgebra A of Q(2, beta) generated by K, f_1^+-."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, QAlgebra, TensorElement
from .cointegrals import LinearForm, _one_dim, _solve_forms
from .errors import AlgebraMismatch
from .scalars import ONE, I
from .structure import (alpha_elem, antipode, antipode_inv, beta_elem, canonical_elements,
                        coassociator, coassociator_inv, coproduct_word, pivot, pivot_inv)


@dataclass
class SubalgebraA:
    ambient: QAlgebra
    words: tuple[int, ...]

    def contains(self, x: AlgebraElement) -> bool:
        ws = set(self.words)
        return all(w in ws for w in x.terms)

    def contains_tensor(self, x: TensorElement) -> bool:
        ws = set(self.words)
        return all(w in ws for key in x.terms for w in key)

    def word(self, m: int, a: int, b: int) -> int:
        return self.ambient.word(m, a, b)

    def h_m(self, m: int) -> AlgebraElement:
        """f_1^+ f_1^- K^m."""
        alg = self.ambient
        return alg.fp(1) * alg.fm(1) * alg.K(m)


def subalgebra_A(alg: QAlgebra) -> SubalgebraA:
    if alg.N != 2:
        raise AlgebraMismatch("the subalgebra A lives inside Q(2, beta)")
    words = tuple(alg.word(m, a, b) for m in range(4) for a in (0, 1) for b in (0, 1))
    return SubalgebraA(alg, words)


def closure_report(A: SubalgebraA) -> dict[str, bool]:
    """A is closed under product, coproduct and antipode and holds the structure elements."""
    alg = A.ambient
    B = alg.basis
    res = {}
    res["closed under product"] = all(A.contains(B(x) * B(y)) for x in A.words for y in A.words)
    res["closed under coproduct"] = all(A.contains_tensor(coproduct_word(alg, w)) for w in A.words)
    res["closed under S and S^-1"] = all(A.contains(antipode(B(w)))
                                         and A.contains(antipode_inv(B(w))) for w in A.words)
    res["contains Phi, Phi^-1"] = (A.contains_tensor(coassociator(alg))
                                   and A.contains_tensor(coassociator_inv(alg)))
    res["contains alpha, beta, g"] = all(A.contains(x) for x in (alpha_elem(alg), beta_elem(alg),
                                                                 pivot(alg), pivot_inv(alg)))
    can = canonical_elements(alg)
    res["contains q^R, p^R, q^L, p^L"] = all(A.contains_tensor(can[k])
                                             for k in ("qR", "pR", "qL", "pL"))
    return res


def _sym_space(A: SubalgebraA, side: str) -> list[dict]:
    alg = A.ambient
    can = canonical_elements(alg)
    if side == "right":
        return _solve_forms(alg, A.words, list(A.words),
                            lambda w: can["qR"] * coproduct_word(alg, w) * can["pR"], 0,
                            pivot_inv(alg))
    if side == "left":
        return _solve_forms(alg, A.words, list(A.words),
                            lambda w: can["qL"] * coproduct_word(alg, w) * can["pL"], 1,
                            pivot(alg))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def symmetrised_cointegral_A_space(A: SubalgebraA, side: str = "right") -> list[dict]:
    return _sym_space(A, side)


def symmetrised_cointegral_A(A: SubalgebraA, side: str = "right") -> LinearForm:
    """Solve the symmetrised-cointegral equation on A, normalised by value 1 on f_1^+ f_1^- K."""
    alg = A.ambient

    def build():
        vec = _one_dim(_sym_space(A, side), f"A symmetrised cointegral ({side})")
        w1 = alg.word(1, 1, 1)
        scale = ONE / vec[w1]
        return LinearForm(alg, {w: v * scale for w, v in vec.items()}, f"hat-lambda^(A,{side[0]})")
    return alg.cached(f"symcoint_A_{side}", build)


def symmetrised_cointegral_A_closed(A: SubalgebraA, side: str = "right") -> LinearForm:
    alg = A.ambient
    b2 = alg.beta * alg.beta
    sign = -1 if side == "right" else 1
    vals = {alg.word(1, 1, 1): ONE, alg.word(3, 1, 1): I * b2 * sign}
    return LinearForm(alg, vals, f"hat-lambda^(A,{side[0]}) closed form")
