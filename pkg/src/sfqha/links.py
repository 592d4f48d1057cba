"""Invariants of framed unknots, framed Hopf links and (2, m)-torus knots.

Each link is cut open along one strand coloured by a module X in the active
ideal; what remains is a central element acting on X, and the invariant is
the trace of that action.  The twist is the action of v^-1, so the n-framed
unknot is t_X(v^-n).  The open Hopf link with a simple colour U acts by the
internal character chi_U.  The torus knot is the central element xi_m,
obtained by contracting the braiding along a left duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, QAlgebra, TensorElement, e0, e1, top
from .errors import EvenM, NotScalarAction
from .linalg import Matrix
from .reps import SIMPLE_NAMES, MuMatrix, Rep, grothendieck_class
from .scalars import ONE, ZERO, CycScalar
from .structure import (canonical_elements, e1_pm, monodromy, monodromy_inv, pivot_inv,
                        r_matrix, r_matrix_inv, ribbon)
from .traces import CATEGORICAL, MODIFIED, PULLBACK, TraceAssignment, is_central


# -- framed unknot ---------------------------------------------------------------------------

def unknot_invariant(trace: TraceAssignment, X: Rep, n: int) -> CycScalar:
    return trace.trace_of(X, ribbon(X.alg, -n))


def twist_scalar(U: Rep) -> CycScalar:
    """The scalar by which v^-1 acts on U."""
    m = U.act(ribbon(U.alg, -1))
    c = m.entry(0, 0)
    if m != Matrix.identity(U.dim).scale(c):
        raise NotScalarAction(f"the twist does not act as a scalar on {U.label}")
    return c


# -- framed Hopf link --------------------------------------------------------------------------

def internal_character(alg: QAlgebra, simple: str) -> AlgebraElement:
    """chi_U for a simple U, the central element of the open Hopf link."""
    def build():
        E0, E1 = e0(alg), e1(alg)
        if simple in ("X0+", "X0-"):
            return E1 + E0 if simple == "X0+" else E1 - E0
        sign = 1 if simple == "X1+" else -1
        b2 = alg.beta * alg.beta
        lead = E0 * alg.K() * top(alg) * (b2 * (sign * 4 ** alg.N))
        return lead + (e1_pm(alg, 1) - e1_pm(alg, -1)) * (2 ** alg.N)
    return alg.cached(f"chi_{simple}", build)


def character_of_class(alg: QAlgebra, cls: dict[str, int]) -> AlgebraElement:
    out = alg.zero()
    for u, mult in cls.items():
        if mult:
            out = out + internal_character(alg, u) * mult
    return out


_SIMPLE_TWIST_SIGN = {"X0+": 0, "X0-": 0, "X1+": 1, "X1-": -1}


def simple_twist(alg: QAlgebra, simple: str) -> CycScalar:
    """Twist eigenvalue of a simple module: 1 on X0^+-, eps beta^-1 on X1^eps."""
    s = _SIMPLE_TWIST_SIGN[simple]
    return ONE if s == 0 else alg.beta.inverse() * s


def hopf_invariant(trace: TraceAssignment, X: Rep, a: int, U: Rep, b: int) -> CycScalar:
    """Invariant of the Hopf link with X (cut, framing a) and U (framing b).

    A non-simple U is replaced by its composition factors.
    """
    alg = X.alg
    cls = grothendieck_class(U)
    total = ZERO
    va = ribbon(alg, -a)
    for u in SIMPLE_NAMES:
        mult = cls[u]
        if not mult:
            continue
        value = trace.trace_of(X, va * internal_character(alg, u))
        total = total + value * (simple_twist(alg, u) ** b) * mult
    return total


# -- torus knots -----------------------------------------------------------------------------

@dataclass
class XiElement:
    m: int
    value: AlgebraElement


def _xi_tensor(alg: QAlgebra, m: int) -> TensorElement:
    """Y with xi_m = sum Y_1 g^-1 Y_2."""
    n = (abs(m) - 1) // 2
    can = canonical_elements(alg)
    qL21 = can["qL"].swap()
    if m > 0:
        core = r_matrix(alg) * (monodromy(alg) ** n)
    else:
        core = ((monodromy_inv(alg) ** n) * r_matrix_inv(alg)).swap()
    return qL21 * core * can["pL"]


def xi_element(alg: QAlgebra, m: int, check: bool = True) -> XiElement:
    if m % 2 == 0:
        raise EvenM(f"torus knots (2, m) need odd m, got {m}")

    def build():
        return _xi_tensor(alg, m).multiply_legs(pivot_inv(alg))
    value = alg.cached(f"xi{m}", build)
    if check:
        assert is_central(value), "xi_m is not central"
    return XiElement(m, value)


def torus_invariant(trace: TraceAssignment, X: Rep, m: int) -> CycScalar:
    return trace.trace_of(X, xi_element(X.alg, m).value)


# -- closed forms of the invariant table ---------------------------------------------------------

# the torus-knot entries on the projective ideal were interpolated from
# these computed ranges of n, with |m| = 2n + 1
BLUE_RANGES = {1: range(0, 11), 2: range(0, 6), 3: range(0, 2)}


def in_blue_range(N: int, m: int) -> bool:
    return (abs(m) - 1) // 2 in BLUE_RANGES.get(N, ())


def _sign(label: str) -> int:
    return 1 if label.endswith("+") else -1


def expected_unknot(alg: QAlgebra, regime: str, label: str, n: int,
                    mu: MuMatrix | None = None) -> CycScalar:
    N, beta = alg.N, alg.beta
    if regime == CATEGORICAL:
        return CycScalar(_sign(label)) if label.startswith("X0") else ZERO
    if regime == MODIFIED:
        eps = _sign(label)
        if label.startswith("P0"):
            return beta ** -2 * _q(eps * n ** N, 2)
        return beta ** -n * _q(eps ** ((n + 1) % 2), 2 ** (N + 1))
    return (ONE + mu.det()) * (2 * n)


def expected_torus(alg: QAlgebra, regime: str, label: str, m: int,
                   mu: MuMatrix | None = None) -> CycScalar:
    N, beta = alg.N, alg.beta
    if regime == CATEGORICAL:
        return CycScalar(_sign(label)) if label.startswith("X0") else ZERO
    if regime == MODIFIED:
        if label.startswith("P0"):
            return beta ** -2 * _q(_sign(label) * m ** N, 2)
        return beta ** (m - 2) * _q(m ** N, 2 ** (N + 1))
    return (ONE + mu.det()) * (2 * m)


def expected_hopf(alg: QAlgebra, regime: str, X: str, a: int, U: str, b: int,
                  mu: MuMatrix | None = None) -> CycScalar:
    N, binv = alg.N, alg.beta.inverse()
    if regime == CATEGORICAL:
        if X.startswith("X0") and U.startswith("X0"):
            return CycScalar(_sign(X) * _sign(U))
        return ZERO
    if regime == MODIFIED:
        nu, rho = _sign(X), _sign(U)
        if X.startswith("P0") and U.startswith("X0"):
            return binv ** 2 * _q(nu * rho * a ** N, 2)
        if X.startswith("X1") and U.startswith("X0"):
            return (binv * nu) ** a * _q(nu, 2 ** (N + 1))
        if X.startswith("P0") and U.startswith("X1"):
            return (binv * rho) ** b * _q(rho * 2 ** N, 2)
        return (binv * nu) ** a * (binv * rho) ** b * _q(1, 2)
    if U.startswith("X1"):
        return ZERO
    return (ONE + mu.det()) * (2 * a * _sign(U))


def _q(num: int, den: int) -> CycScalar:
    return CycScalar(Fraction(num, den))


__all__ = [
    "unknot_invariant", "twist_scalar", "internal_character", "character_of_class",
    "simple_twist", "hopf_invariant", "XiElement", "xi_element", "torus_invariant",
    "BLUE_RANGES", "in_blue_range", "expected_unknot", "expected_torus", "expected_hopf",
]
