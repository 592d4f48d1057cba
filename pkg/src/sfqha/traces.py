"""Categorical traces, modified traces on projectives and the pullback trace from A.

Modified traces of a general module M are computed from an explicit
splitting of a free module onto M.  For a finite-dimensional algebra H with
non-degenerate form lam and dual bases lam(b~_c b_d) = delta_cd, every
H-linear map M -> H has the form T_phi(m) = sum_c phi(b~_c m) b_c for a
linear functional phi on M.  A section of pi: H^n -> M, (h_i) -> sum h_i m_i,
is therefore a solution phi_1..phi_n of the linear system
sum_i T_phi_i(m) m_i = m, and the trace becomes sum_i phi_i(f(m_i)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import AlgebraElement, QAlgebra
from .cointegrals import LinearForm, solve_symmetrised_cointegral
from .errors import NotCentral, NotInIdeal, NotIntertwiner, NotProjective
from .linalg import Matrix, inverse, solve
from .reps import Rep, element_coords, gen_element, restrict, subrep
from .scalars import ONE, ZERO, CycScalar, I
from .structure import alpha_elem, antipode, antipode_inv, beta_elem, pivot
from .subalgebra import subalgebra_A, symmetrised_cointegral_A


def _require_intertwiner(M: Rep, f: Matrix) -> None:
    if f.nrows != M.dim or f.ncols != M.dim or not M.commutes_with_action(f):
        raise NotIntertwiner(f"map is not an endomorphism of {M.label or 'the module'}")


# -- categorical trace -------------------------------------------------------------------

def categorical_trace(M: Rep, f: Matrix | None = None, side: str = "right") -> CycScalar:
    """tr(g beta S(alpha) f) (right) or tr(alpha S^-1(g beta) f) (left)."""
    alg = M.alg
    f = Matrix.identity(M.dim) if f is None else f
    _require_intertwiner(M, f)
    gb = pivot(alg) * beta_elem(alg)
    if side == "right":
        h = gb * antipode(alpha_elem(alg))
    else:
        h = alpha_elem(alg) * antipode_inv(gb)
    return (M.act(h) @ f).trace()


# -- splittings --------------------------------------------------------------------------

def _words_of(M: Rep) -> list[int]:
    alg = M.alg
    return [w for w in alg.words() if M.allowed_word(w)]


@dataclass
class FrobeniusData:
    form: LinearForm
    words: list[int]
    dual: dict  # c -> {e: coefficient} with b~_c = sum_e X[c][e] b_e


def frobenius_data(form: LinearForm, words: list[int]) -> FrobeniusData:
    alg = form.alg
    n = len(words)
    gram_rows: dict = {}
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            v = form(alg.basis(a) * alg.basis(b))
            if not v.is_zero():
                gram_rows.setdefault(i, {})[j] = v
    # lam(b~_c b_d) = delta: X G = I, so X = G^{-1}
    X = inverse(Matrix(n, n, gram_rows))
    return FrobeniusData(form, words, {c: X.rows.get(c, {}) for c in range(n)})


@dataclass
class SplittingData:
    """pi: H^n -> M on generators m_i, section iota built from functionals phi_i."""

    module: Rep
    generators: list[dict]
    phis: list[dict]
    frob: FrobeniusData
    pi: Matrix
    iota: Matrix

    @property
    def n(self) -> int:
        return len(self.generators)

    def verify(self) -> bool:
        """pi o iota = id and both maps intertwine the action."""
        M = self.module
        if self.pi @ self.iota != Matrix.identity(M.dim):
            return False
        free = _free_action(M, self.frob.words, self.n)
        for key, g in M.gens.items():
            if self.iota @ g != free[key] @ self.iota:
                return False
            if g @ self.pi != self.pi @ free[key]:
                return False
        return True


def _free_action(M: Rep, words: list[int], n: int) -> dict:
    """Left multiplication on H^n in the word basis (index i * |words| + c)."""
    alg = M.alg
    pos = {w: c for c, w in enumerate(words)}
    nw = len(words)
    out = {}
    for key in M.gens:
        x = gen_element(alg, key)
        rows: dict = {}
        for c, w in enumerate(words):
            for w2, v in (x * alg.basis(w)).terms.items():
                r = pos[w2]
                for i in range(n):
                    rows.setdefault(i * nw + r, {})[i * nw + c] = v
        out[key] = Matrix(n * nw, n * nw, rows)
    return out


def module_generators(M: Rep) -> list[dict]:
    """A generating set chosen greedily from the standard basis."""
    gens: list[dict] = []
    span = 0
    for k in range(M.dim):
        if span == M.dim:
            break
        trial = gens + [{k: ONE}]
        d = subrep(M, trial).rep.dim
        if d > span:
            gens, span = trial, d
    return gens


def find_splitting(M: Rep, form: LinearForm, generators: list[dict] | None = None
                   ) -> SplittingData | NotProjective:
    """Split a free module onto M, or report that M is not projective."""
    words = _words_of(M)
    frob = frobenius_data(form, words)
    gens = module_generators(M) if generators is None else generators
    d = M.dim
    n = len(gens)
    bmats = [M.word_matrix(w) for w in words]
    dual_mats = []
    for c in range(len(words)):
        acc = Matrix.zeros(d)
        for e, x in frob.dual[c].items():
            acc = acc + bmats[e].scale(x)
        dual_mats.append(acc)
    b_on_gen = [[bm.apply(m) for m in gens] for bm in bmats]
    # equation (a, r): sum_{i,k} phi_i[k] sum_c dual_c[k][a] (b_c m_i)[r] = delta_{ra}
    eqs: dict = {}
    for c in range(len(words)):
        col_view = dual_mats[c].transpose().rows  # a -> {k: dual_c[k][a]}
        for a, col in col_view.items():
            for i in range(n):
                vec = b_on_gen[c][i]
                if not vec:
                    continue
                for k, x in col.items():
                    for r, y in vec.items():
                        row = eqs.setdefault((a, r), {})
                        idx = i * d + k
                        old = row.get(idx)
                        v = x * y
                        row[idx] = v if old is None else old + v
    rows, rhs = [], []
    for a in range(d):
        for r in range(d):
            rows.append(eqs.get((a, r), {}))
            rhs.append(ONE if a == r else ZERO)
    sol = solve(rows, rhs, n * d)
    if sol is None:
        return NotProjective(f"{M.label or 'module'} is not projective")
    phis = [{k: sol[i * d + k] for k in range(d) if i * d + k in sol} for i in range(n)]
    nw = len(words)
    pi_rows: dict = {}
    for i in range(n):
        for c in range(nw):
            for r, v in b_on_gen[c][i].items():
                pi_rows.setdefault(r, {})[i * nw + c] = v
    iota_rows: dict = {}
    for i in range(n):
        for c in range(nw):
            # T_phi_i(e_k) has b_c-coefficient sum_k' phi_i[k'] dual_c[k'][k]
            row = {}
            for kp, ph in phis[i].items():
                for k, x in dual_mats[c].rows.get(kp, {}).items():
                    old = row.get(k)
                    v = ph * x
                    row[k] = v if old is None else old + v
            row = {k: v for k, v in row.items() if not v.is_zero()}
            if row:
                iota_rows[i * nw + c] = row
    return SplittingData(M, gens, phis, frob, Matrix(d, n * nw, pi_rows),
                         Matrix(n * nw, d, iota_rows))


def is_projective(M: Rep, form: LinearForm) -> bool:
    return isinstance(find_splitting(M, form), SplittingData)


def trace_via_splitting(sp: SplittingData, f: Matrix) -> CycScalar:
    total = ZERO
    for m, phi in zip(sp.generators, sp.phis):
        img = f.apply(m)
        for k, v in img.items():
            p = phi.get(k)
            if p is not None:
                total = total + p * v
    return total


def modified_trace(form: LinearForm, M: Rep, f: Matrix | None = None,
                   splitting: SplittingData | None = None) -> CycScalar:
    """Modified trace of an endomorphism of a projective module, via a splitting."""
    f = Matrix.identity(M.dim) if f is None else f
    _require_intertwiner(M, f)
    sp = find_splitting(M, form) if splitting is None else splitting
    if isinstance(sp, NotProjective):
        raise sp
    return trace_via_splitting(sp, f)


def modified_trace_ideal(form: LinearForm, M: Rep, f: Matrix | None = None) -> CycScalar:
    """lam((i o f o p)(1)) = lam(f(e)) for a module H e built from an idempotent."""
    f = Matrix.identity(M.dim) if f is None else f
    _require_intertwiner(M, f)
    img = f.apply(element_coords(M, M.idempotent))
    x = M.alg.zero()
    for i, c in img.items():
        x = x + M.ideal_basis[i] * c
    return form(x)


def central_trace(form: LinearForm, e: AlgebraElement, z: AlgebraElement) -> CycScalar:
    """Modified trace on H e of the action of a central z: lam(z e)."""
    return form(z * e)


# -- the pullback trace -----------------------------------------------------------------------

def pullback_constant(alg: QAlgebra, side: str = "right") -> CycScalar:
    b2 = alg.beta * alg.beta
    return CycScalar(4) / (ONE - I * b2) if side == "right" else CycScalar(4) / (ONE + I * b2)


def pullback_trace(M: Rep, f: Matrix | None = None, side: str = "right") -> CycScalar:
    """4/(1 - i beta^2) t^{A,r}_{Res M}(f), equivalently 4/(1 + i beta^2) t^{A,l}."""
    alg = M.alg
    f = Matrix.identity(M.dim) if f is None else f
    _require_intertwiner(M, f)
    A = subalgebra_A(alg)
    form = symmetrised_cointegral_A(A, side)
    sp = find_splitting(restrict(M), form)
    if isinstance(sp, NotProjective):
        raise NotInIdeal(f"Res({M.label}) is not projective over A")
    return pullback_constant(alg, side) * trace_via_splitting(sp, f)


def a_trace(M: Rep, f: Matrix | None = None, side: str = "right") -> CycScalar:
    """The modified trace t^{A,r} or t^{A,l} of an A-module endomorphism."""
    f = Matrix.identity(M.dim) if f is None else f
    _require_intertwiner(M, f)
    form = symmetrised_cointegral_A(subalgebra_A(M.alg), side)
    return modified_trace(form, M, f)


# -- trace regimes ------------------------------------------------------------------------------

CATEGORICAL = "categorical"
MODIFIED = "modified"
PULLBACK = "pullback"


@dataclass
class TraceAssignment:
    regime: str
    alg: QAlgebra
    member: Callable[[Rep], bool]
    evaluate: Callable[[Rep, Matrix], CycScalar]

    def trace(self, M: Rep, f: Matrix | None = None) -> CycScalar:
        if not self.member(M):
            raise NotInIdeal(f"{M.label} is not in the {self.regime} ideal")
        return self.evaluate(M, Matrix.identity(M.dim) if f is None else f)

    def trace_of(self, M: Rep, z: AlgebraElement) -> CycScalar:
        """Trace of the action of an element z, which must give an endomorphism."""
        return self.trace(M, M.act(z))


def _modified_eval(alg: QAlgebra):
    form = solve_symmetrised_cointegral(alg, "right")

    def ev(M: Rep, f: Matrix) -> CycScalar:
        if M.idempotent is not None and M.ambient == "Q":
            return modified_trace_ideal(form, M, f)
        return modified_trace(form, M, f)
    return ev


def _in_projective(alg: QAlgebra):
    form = solve_symmetrised_cointegral(alg, "right")
    return lambda M: M.idempotent is not None or is_projective(M, form)


def _in_pullback(M: Rep) -> bool:
    if M.alg.N != 2:
        return False
    form = symmetrised_cointegral_A(subalgebra_A(M.alg), "right")
    return is_projective(restrict(M), form)


def trace_assignment(alg: QAlgebra, regime: str) -> TraceAssignment:
    if regime == CATEGORICAL:
        return TraceAssignment(regime, alg, lambda M: True, lambda M, f: categorical_trace(M, f))
    if regime == MODIFIED:
        return TraceAssignment(regime, alg, _in_projective(alg), _modified_eval(alg))
    if regime == PULLBACK:
        return TraceAssignment(regime, alg, _in_pullback, lambda M, f: pullback_trace(M, f))
    raise ValueError(f"unknown trace regime {regime!r}")


def is_central(z: AlgebraElement) -> bool:
    return all(z.commutator(g).is_zero() for g in z.alg.generators())


def pairing(z: AlgebraElement, z2: AlgebraElement, P: Rep, trace: TraceAssignment) -> CycScalar:
    """(z, z') = t_P(action of z z')."""
    for x in (z, z2):
        if not is_central(x):
            raise NotCentral("pairing arguments must be central")
    return trace.trace_of(P, z * z2)


__all__ = [
    "categorical_trace", "find_splitting", "SplittingData", "is_projective", "modified_trace",
    "modified_trace_ideal", "central_trace", "pullback_trace", "pullback_constant", "a_trace",
    "TraceAssignment", "trace_assignment", "pairing", "is_central", "module_generators",
    "trace_via_splitting", "frobenius_data", "CATEGORICAL", "MODIFIED", "PULLBACK",
]
