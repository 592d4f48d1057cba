"""Lens-space invariants of Q(N, beta).

The lens space L(p, q) is surgery on a chain of unknots framed by a
continued fraction p/q = [a_n; a_{n-1}, ..., a_1].  Its invariants are
pairings of central elements: f(a)^ is the image of phi_1 under the
SL(2, Z) word T^{a_n} S ... T^{a_1} S acting on the centre, and the
two graphs L_* and L_o contract it against the Lyubashenko integral Lambda
and the monodromy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebra import AlgebraElement, QAlgebra, e0, e1, pair_product, top
from .cointegrals import lyubashenko_integral, stabilisation_coefficients
from .errors import DimensionMismatch, NotCentral, NotCoprime
from .linalg import RowReducer, nullspace
from .reps import MuMatrix, Rep
from .scalars import ONE, ZERO, CycScalar
from .structure import (alpha_elem, antipode, antipode_inv, coassociator, coassociator_inv,
                        e0_pm, e1_pm, monodromy)
from .traces import TraceAssignment, is_central, pairing


def _q(num, den=1) -> CycScalar:
    return CycScalar(Fraction(num, den))


# -- continued fractions ---------------------------------------------------------------------

def cf_value(a: tuple[int, ...]) -> Fraction:
    """[a_n; a_{n-1}, ..., a_1] for a = (a_1, ..., a_n)."""
    x = Fraction(a[0])
    for ai in a[1:]:
        x = ai - 1 / x
    return x


def partial_values(a: tuple[int, ...]) -> list[Fraction]:
    """p_i / q_i = [a_i; a_{i-1}, ..., a_1] for i = 1..n."""
    out = []
    x = None
    for ai in a:
        x = Fraction(ai) if x is None else ai - 1 / x
        out.append(x)
    return out


@dataclass(frozen=True)
class ContinuedFraction:
    p: int
    q: int
    a: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_sequence(cls, a) -> ContinuedFraction:
        a = tuple(int(x) for x in a)
        if not a or any(x == 0 for x in a):
            raise ValueError("continued fraction entries must be non-zero")
        vals = partial_values(a)
        if any(v <= 0 for v in vals):
            raise ValueError(f"partial values of {a} are not all positive")
        return cls(vals[-1].numerator, vals[-1].denominator, a)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "a": list(self.a)}


def cf_expand(p: int, q: int) -> ContinuedFraction:
    """Ceiling algorithm: a_n = ceil(p/q), then recurse on 1/(a_n - p/q)."""
    if p <= 0 or q <= 0:
        raise ValueError("p and q must be positive")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    x = Fraction(p, q)
    rev = []
    while True:
        c = -((-x.numerator) // x.denominator)
        rev.append(c)
        rest = c - x
        if rest == 0:
            break
        x = 1 / rest
    cf = ContinuedFraction(p, q, tuple(reversed(rev)))
    assert cf_value(cf.a) == Fraction(p, q)
    assert all(v > 0 for v in partial_values(cf.a))
    return cf


def linking_matrix(a) -> list[list[int]]:
    n = len(a)
    return [[a[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(n)]
            for i in range(n)]


def leading_minors(m: list[list[int]]) -> list[Fraction]:
    """Determinants of the upper-left k x k blocks, k = 1..n, by exact elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    minors = []
    det = Fraction(1)
    for k in range(n):
        if a[k][k] == 0:
            # a vanishing minor; the remaining ones follow from full determinants
            minors.extend(_det(m, j) for j in range(k + 1, n + 1))
            return minors
        det *= a[k][k]
        minors.append(det)
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return minors


def _det(m: list[list[int]], k: int) -> Fraction:
    a = [[Fraction(x) for x in row[:k]] for row in m[:k]]
    det = Fraction(1)
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, k):
            f = a[r][c] / a[c][c]
            for j in range(c, k):
                a[r][j] -= f * a[c][j]
    return det


def lk_det(a) -> int:
    d = _det(linking_matrix(a), len(a))
    assert d.denominator == 1
    return int(d)


def lk_signature(a) -> int:
    """Signature from the signs of the leading minors (Jacobi's rule)."""
    minors = leading_minors(linking_matrix(a))
    if any(d == 0 for d in minors):
        raise ValueError("a leading minor vanishes; Jacobi's rule does not apply")
    seq = [Fraction(1)] + minors
    neg = sum(1 for x, y in zip(seq, seq[1:]) if (x > 0) != (y > 0))
    return len(a) - 2 * neg


def appendix_chain(a) -> bool:
    """With b = reversed(a) and p_j/q_j = [b_j; b_{j+1}, ..., b_n] in lowest terms:
    q_j = p_{j+1} for j < n, and p_1 = det M_a = prod_j p_j/q_j."""
    vals = list(reversed(partial_values(tuple(a))))
    ps = [v.numerator for v in vals]
    qs = [v.denominator for v in vals]
    chain = all(qs[j] == ps[j + 1] for j in range(len(vals) - 1))
    prod = Fraction(1)
    for v in vals:
        prod *= v
    return chain and qs[-1] == 1 and prod == ps[0] == lk_det(a)


# -- the centre ------------------------------------------------------------------------------------

def phi_element(alg: QAlgebra, label: str) -> AlgebraElement:
    """Central elements phi_V for V in X0+-, X1+-, P0+ and the unit."""
    def build():
        b2 = alg.beta * alg.beta
        N = alg.N
        if label in ("X0+", "1"):
            return e0_pm(alg, 1) * alg.K() * top(alg) * (b2 * 2 ** (N + 1))
        if label == "X0-":
            return e0_pm(alg, -1) * alg.K() * top(alg) * (b2 * 2 ** (N + 1))
        if label == "X1+":
            return e1_pm(alg, 1) * (2 ** (N + 1))
        if label == "X1-":
            return e1_pm(alg, -1) * (-(2 ** (N + 1)))
        if label in ("P0+", "P0-"):
            return alg.K() * e0(alg) * top(alg) * (b2 * 2 ** (3 * N))
        raise ValueError(f"unknown module label {label!r}")
    return alg.cached(f"phi_{label}", build)


def z_lambda_words(alg: QAlgebra) -> list[tuple[int, int]]:
    """(s, t) bitmasks with |s| + |t| even, indexing e0 prod f^+^s f^-^t."""
    out = []
    for s in range(1 << alg.N):
        for t in range(1 << alg.N):
            if (bin(s).count("1") + bin(t).count("1")) % 2 == 0:
                out.append((s, t))
    return out


@dataclass
class CenterData:
    alg: QAlgebra
    dimension: int
    kernel: list[dict]
    z_p: list[AlgebraElement]
    z_lambda: list[AlgebraElement]
    z_ev: list[AlgebraElement] = field(default_factory=list)

    @property
    def basis(self) -> list[AlgebraElement]:
        return self.z_p + self.z_lambda


def center_kernel(alg: QAlgebra) -> list[dict]:
    """Solve [z, x] = 0 for all generators x as a linear system."""
    rows: dict = {}
    B = alg.basis
    for gi, g in enumerate(alg.generators()):
        for w in alg.words():
            c = B(w) * g - g * B(w)
            for u, v in c.terms.items():
                rows.setdefault((gi, u), {})[w] = v
    return nullspace(rows.values(), len(alg.words()))


def compute_center(alg: QAlgebra) -> CenterData:
    def build():
        kernel = center_kernel(alg)
        expected = 3 + (1 << (2 * alg.N - 1))
        if len(kernel) != expected:
            raise DimensionMismatch(f"centre has dimension {len(kernel)}, expected {expected}")
        zp = [phi_element(alg, x) for x in ("P0+", "X1+", "X1-")]
        E0 = e0(alg)
        zl = [E0 * alg.b(0, s, t) for s, t in z_lambda_words(alg)]
        zev = [E0 * pair_product(alg, s) for s in range(1 << alg.N)]
        data = CenterData(alg, len(kernel), kernel, zp, zl, zev)
        span = RowReducer()
        for v in kernel:
            span.add(v)
        structured = RowReducer()
        for z in data.basis:
            if not span.contains(dict(z.terms)):
                raise DimensionMismatch("structured basis element outside the centre")
            structured.add(dict(z.terms))
        if structured.rank != expected:
            raise DimensionMismatch("structured basis is linearly dependent")
        return data
    return alg.cached("centre", build)


def phi_one_identity(alg: QAlgebra) -> bool:
    """phi_1 = 2^{-2N} phi_{P0+} + 2^N beta^2 e0 TOP."""
    b2 = alg.beta * alg.beta
    rhs = phi_element(alg, "P0+") * _q(1, 4 ** alg.N) + e0(alg) * top(alg) * (b2 * 2 ** alg.N)
    return phi_element(alg, "1") == rhs


# -- SL(2, Z) action on the blocks of the centre -----------------------------------------------------

def s_zp(alg: QAlgebra) -> list[list[CycScalar]]:
    N = alg.N
    h = _q(1, 2)
    return [[ZERO, _q(1, 2 ** N), _q(-1, 2 ** N)],
            [_q(2 ** N, 2), h, h],
            [_q(-(2 ** N), 2), h, h]]


def t_zp(alg: QAlgebra) -> list[list[CycScalar]]:
    bi = alg.beta.inverse()
    return [[ONE, ZERO, ZERO], [ZERO, bi, ZERO], [ZERO, ZERO, -bi]]


def _mat_vec(m, v):
    return [sum((m[i][j] * v[j] for j in range(len(v))), ZERO) for i in range(len(m))]


def _ops(word):
    """Normalise a word to a list of ('S', 1) / ('T', k) applied left to right."""
    out = []
    for op in word:
        if op == "S":
            out.append(("S", 1))
        elif isinstance(op, tuple):
            out.append((op[0], int(op[1])))
        else:
            raise ValueError(f"bad SL(2,Z) letter {op!r}")
    return out


def st_on_ZP(alg: QAlgebra, vec, word) -> list[CycScalar]:
    """Apply the letters of word, in order, to coordinates in (phi_P0+, phi_X1+, phi_X1-)."""
    v = [CycScalar.coerce(x) for x in vec]
    S, T = s_zp(alg), t_zp(alg)
    for name, k in _ops(word):
        if name == "S":
            v = _mat_vec(S, v)
        else:
            for _ in range(abs(k)):
                v = _mat_vec(T, v) if k > 0 else _mat_vec(_inv3_diag(T), v)
    return v


def _inv3_diag(T):
    return [[T[i][j].inverse() if i == j else ZERO for j in range(3)] for i in range(3)]


def zp_element(alg: QAlgebra, vec) -> AlgebraElement:
    out = alg.zero()
    for c, lab in zip(vec, ("P0+", "X1+", "X1-")):
        out = out + phi_element(alg, lab) * c
    return out


# per factor of Z_ev, in the basis (e0 f^+ f^-, e0)
_S2 = [[Fraction(0), Fraction(2)], [Fraction(-1, 2), Fraction(0)]]
_T2 = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]


def zev_coords(alg: QAlgebra, z: AlgebraElement) -> dict[int, CycScalar]:
    """Coordinates of z = sum_s c_s e0 prod_j (f_j^+ f_j^-)^{s_j}."""
    out = {}
    for s in range(1 << alg.N):
        c = z.coeff(alg.word(0, s, s)) * 2
        if c:
            out[s] = c
    if zev_element(alg, out) != z:
        raise ValueError("element is not in Z_ev")
    return out


def zev_element(alg: QAlgebra, coords: dict) -> AlgebraElement:
    E0 = e0(alg)
    out = alg.zero()
    for s, c in coords.items():
        out = out + E0 * pair_product(alg, s) * c
    return out


def _factor_power(m, k):
    out = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    base = m if k >= 0 else [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]
    for _ in range(abs(k)):
        out = [[sum(out[i][l] * base[l][j] for l in range(2)) for j in range(2)] for i in range(2)]
    return out


def _tensor_apply(N: int, m, coords: dict) -> dict:
    # factor j: index 0 <-> s_j = 1, index 1 <-> s_j = 0
    out: dict = {}
    for s, c in coords.items():
        for s2 in range(1 << N):
            f = Fraction(1)
            for j in range(N):
                i_new = 0 if (s2 >> j) & 1 else 1
                i_old = 0 if (s >> j) & 1 else 1
                f *= m[i_new][i_old]
                if f == 0:
                    break
            if f:
                out[s2] = out.get(s2, ZERO) + c * _q(f)
    return {s: c for s, c in out.items() if c}


def st_on_Zev(alg: QAlgebra, z: AlgebraElement, word) -> AlgebraElement:
    coords = zev_coords(alg, z)
    b2 = alg.beta * alg.beta
    for name, k in _ops(word):
        if name == "S":
            coords = {s: c * b2 for s, c in _tensor_apply(alg.N, _S2, coords).items()}
        else:
            coords = _tensor_apply(alg.N, _factor_power(_T2, k), coords)
    return zev_element(alg, coords)


def lens_word(a) -> list:
    """S, T^{a_1}, S, T^{a_2}, ..., S, T^{a_n}, applied left to right."""
    out = []
    for ai in a:
        out += ["S", ("T", ai)]
    return out


# -- f(a)^ -------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Coefficients3:
    c0: CycScalar
    cp: CycScalar
    cm: CycScalar

    def as_list(self) -> list[CycScalar]:
        return [self.c0, self.cp, self.cm]


def coefficients(alg: QAlgebra, cf: ContinuedFraction, extend: bool = False) -> list[Coefficients3]:
    """c_0, ..., c_n (and c_{n+1} with a_{n+1} = 0 if extend)."""
    N = alg.N
    seq = list(cf.a) + ([0] if extend else [])
    c = Coefficients3(ONE, ZERO, ZERO)
    out = [c]
    for ai in seq:
        c0 = (c.cp - c.cm) * _q(1, 2 ** N)
        base = alg.beta ** (-ai) * _q(1, 2)
        sgn = 1 if ai % 2 == 0 else -1
        cp = base * (c.cp + c.cm + c.c0 * (2 ** N))
        cm = base * (c.cp + c.cm - c.c0 * (2 ** N)) * sgn
        c = Coefficients3(c0, cp, cm)
        out.append(c)
    return out


def f_hat_zlambda(alg: QAlgebra, cf: ContinuedFraction) -> AlgebraElement:
    """2^N beta^{6n+2} sum_s p^|s| (q/2)^{N-|s|} e0 prod (f^+f^-)^s."""
    N = alg.N
    coords = {}
    for s in range(1 << N):
        k = bin(s).count("1")
        coords[s] = _q(cf.p ** k * cf.q ** (N - k), 2 ** (N - k))
    pref = alg.beta ** (6 * cf.n + 2) * (2 ** N)
    return zev_element(alg, {s: c * pref for s, c in coords.items()})


def f_hat(alg: QAlgebra, cf: ContinuedFraction) -> AlgebraElement:
    """Recursion on Z_P plus closed form on Z_Lambda."""
    c = coefficients(alg, cf)[-1]
    zp = zp_element(alg, [x * _q(1, 4 ** alg.N) for x in c.as_list()])
    return zp + f_hat_zlambda(alg, cf)


def f_hat_direct(alg: QAlgebra, cf: ContinuedFraction) -> AlgebraElement:
    """The word T^{a_n} S ... T^{a_1} S applied to phi_1 block by block."""
    word = lens_word(cf.a)
    zp = st_on_ZP(alg, [_q(1, 4 ** alg.N), ZERO, ZERO], word)
    b2 = alg.beta * alg.beta
    zev = st_on_Zev(alg, e0(alg) * top(alg) * (b2 * 2 ** alg.N), word)
    return zp_element(alg, zp) + zev


# -- F(z) and zeta -----------------------------------------------------------------------------------

def F_of(z: AlgebraElement) -> AlgebraElement:
    """F(z) = <Lambda | z M_1> M_2."""
    alg = z.alg
    if not is_central(z):
        raise NotCentral("F is defined on central elements")
    Lam = lyubashenko_integral(alg)
    form = Lam.precompose_left(z)
    out: dict = {}
    for (w1, w2), c in monodromy(alg).terms.items():
        v = form.on_word(w1)
        if v:
            out[w2] = out.get(w2, ZERO) + c * v
    return AlgebraElement(alg, {w: v for w, v in out.items() if v})


def F_dressed(z: AlgebraElement, antipode_side: str = "S") -> AlgebraElement:
    """<Lambda | S^{+-1}(Phi_1 Phibar_1) alpha z Phi_2 M_1 Phibar_2> Phi_3 M_2 Phibar_3."""
    alg = z.alg
    if not is_central(z):
        raise NotCentral("F is defined on central elements")
    Lam = lyubashenko_integral(alg)
    S = antipode if antipode_side == "S" else antipode_inv
    T = coassociator(alg) * monodromy(alg).place((1, 2), 3) * coassociator_inv(alg)
    az = alpha_elem(alg) * z
    forms: dict = {}
    out: dict = {}
    for (w1, w2, w3), c in T.terms.items():
        f = forms.get(w1)
        if f is None:
            f = forms[w1] = Lam.precompose_left(S(alg.basis(w1)) * az)
        v = f.on_word(w2)
        if v:
            out[w3] = out.get(w3, ZERO) + c * v
    return AlgebraElement(alg, {w: v for w, v in out.items() if v})


def zeta(alg: QAlgebra, kind: str, cf: ContinuedFraction) -> AlgebraElement:
    fa = f_hat(alg, cf)
    if kind == "star":
        return alg.one() * lyubashenko_integral(alg)(alpha_elem(alg) * fa)
    if kind == "circ":
        return F_of(fa)
    raise ValueError(f"kind must be 'star' or 'circ', got {kind!r}")


def zeta_circ_closed(alg: QAlgebra, cf: ContinuedFraction) -> AlgebraElement:
    N = alg.N
    c = coefficients(alg, cf, extend=True)[-1]
    zp = zp_element(alg, [x * _q(1, 4 ** N) for x in c.as_list()])
    pref = alg.beta ** (6 * cf.n) * (cf.p ** N)
    coords = {}
    for s in range(1 << N):
        k = bin(s).count("1")
        coords[s] = pref * _q((-2 * cf.q) ** k, cf.p ** k)
    return zp + zev_element(alg, coords)


# -- invariants ------------------------------------------------------------------------------------

def surgery_coefficient(alg: QAlgebra, cf: ContinuedFraction) -> CycScalar:
    """delta^{-sigma} D^{-1-n} with D = 1, delta = Delta_+ / D and sigma = n."""
    d_plus, d_minus = stabilisation_coefficients(alg)
    assert d_plus * d_minus == ONE
    sigma = lk_signature(cf.a)
    return d_plus ** (-sigma)


def _as_cf(p_or_cf, q=None) -> ContinuedFraction:
    if isinstance(p_or_cf, ContinuedFraction):
        return p_or_cf
    return cf_expand(int(p_or_cf), int(q))


def lens_invariant(kind: str, alpha_hat: AlgebraElement, P: Rep, trace: TraceAssignment,
                   p, q=None) -> CycScalar:
    alg = P.alg
    cf = _as_cf(p, q)
    z = zeta(alg, kind, cf)
    return surgery_coefficient(alg, cf) * pairing(alpha_hat, z, P, trace)


def lyu_lens(alg: QAlgebra, p, q=None) -> CycScalar:
    cf = _as_cf(p, q)
    Lam = lyubashenko_integral(alg)
    return surgery_coefficient(alg, cf) * Lam(alpha_elem(alg) * f_hat(alg, cf))


# -- named central elements ------------------------------------------------------------------------

def alpha_t(alg: QAlgebra, t: int) -> AlgebraElement:
    """e0 prod_j (f_j^+ f_j^-)^{t_j} for a bitmask t."""
    return e0(alg) * pair_product(alg, t)


def alpha_gamma_eps(alg: QAlgebra, gamma: int, eps: int) -> AlgebraElement:
    """e0 f_1^gamma f_2^eps (N = 2)."""
    return e0(alg) * alg.f(gamma, 1) * alg.f(eps, 2)


ALPHA_JL = {(1, 1): (1, 1, -1), (1, 2): (1, 1, 1), (2, 1): (-1, -1, -1), (2, 2): (-1, -1, 1)}


def alpha_jl(alg: QAlgebra, j: int, l: int) -> AlgebraElement:
    sign, gamma, eps = ALPHA_JL[(j, l)]
    return alpha_gamma_eps(alg, gamma, eps) * sign


def named_alpha(alg: QAlgebra, label: str) -> AlgebraElement:
    """Parse labels: id, e0, e1, e0f1f1 style pair masks 't:<bits>', phi:<V>, a<j><l>, chi:<U>."""
    if label == "id":
        return alg.one()
    if label == "e0":
        return e0(alg)
    if label == "e1":
        return e1(alg)
    if label == "integral":
        return phi_element(alg, "1")
    if label.startswith("t:"):
        bits = label[2:]
        return alpha_t(alg, sum(1 << j for j, b in enumerate(bits) if b == "1"))
    if label.startswith("phi:"):
        return phi_element(alg, label[4:])
    if label.startswith("a") and len(label) == 3 and label[1:].isdigit():
        return alpha_jl(alg, int(label[1]), int(label[2]))
    if label.startswith("e0f1") and len(label) == 8:
        # e0f1+f2- style
        return alpha_gamma_eps(alg, 1 if label[4] == "+" else -1, 1 if label[7] == "+" else -1)
    raise ValueError(f"unknown central element label {label!r}")


# -- closed forms of the lens theorems ---------------------------------------------------------------

def expected_modified_alpha_t(alg: QAlgebra, cf: ContinuedFraction, t: int, sign: int) -> CycScalar:
    N, b = alg.N, alg.beta
    k = bin(t).count("1")
    if k == 0:
        c0 = coefficients(alg, cf, extend=True)[-1].c0
        return c0 * b ** (2 * cf.n) * _q(1, 2) + b * b * _q(sign * cf.q ** N, 2)
    return b * b * _q(sign * (-1) ** k * cf.q ** (N - k) * cf.p ** k, 2 ** (k + 1))


def expected_modified_phi_p0(alg: QAlgebra, cf: ContinuedFraction) -> CycScalar:
    return _q(2 ** (2 * alg.N - 1) * cf.p ** alg.N)


def expected_modified_phi_x1(alg: QAlgebra, cf: ContinuedFraction, sign: int) -> CycScalar:
    c = coefficients(alg, cf, extend=True)[-1]
    cpm = c.cp if sign > 0 else c.cm
    return alg.beta ** (2 * cf.n) * cpm * _q(sign * 2, 2 ** alg.N)


def expected_pullback(cf: ContinuedFraction, mu: MuMatrix, label: str) -> CycScalar:
    p, q = cf.p, cf.q
    if label == "e0":
        return (ONE + mu.det()) * (-2 * p * q)
    if label == "t:10":
        return _q(p * p)
    if label == "t:01":
        return mu.det() * (p * p)
    if label.startswith("e0f1"):
        gamma = 1 if label[4] == "+" else -1
        eps = 1 if label[7] == "+" else -1
        val = mu.a(eps) if gamma > 0 else -mu.b(eps)
        return val * (p * p)
    if label in ("phi:P0+", "phi:X1+", "phi:X1-", "t:11"):
        return ZERO
    raise ValueError(f"no closed form for {label!r}")


def recover_mu(values: dict) -> MuMatrix:
    """mu from the four alpha_{j,l} invariants divided by p^2: alpha_{j,l} -> mu_{j,l}."""
    return MuMatrix.of(values[(1, 1)], values[(1, 2)], values[(2, 1)], values[(2, 2)])


__all__ = [
    "ContinuedFraction", "cf_expand", "cf_value", "partial_values", "linking_matrix", "lk_det",
    "lk_signature", "leading_minors", "appendix_chain", "phi_element", "CenterData",
    "compute_center", "center_kernel", "phi_one_identity", "s_zp", "t_zp", "st_on_ZP",
    "st_on_Zev", "zev_coords", "zev_element", "zp_element", "lens_word", "Coefficients3",
    "coefficients", "f_hat", "f_hat_direct", "f_hat_zlambda", "F_of", "F_dressed", "zeta",
    "zeta_circ_closed", "surgery_coefficient", "lens_invariant", "lyu_lens", "alpha_t",
    "alpha_gamma_eps", "alpha_jl", "named_alpha", "ALPHA_JL", "expected_modified_alpha_t",
    "expected_modified_phi_p0", "expected_modified_phi_x1", "expected_pullback", "recover_mu",
    "z_lambda_words",
]
