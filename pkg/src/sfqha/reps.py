"""Finite-dimensional modules of Q(N, beta) and of its subalgebra A as matrix representations."""

from __future__ import annotations

import random
from dataclasses import dataclass

from gmpy2 import mpq

from .algebra import AlgebraElement, QAlgebra, top
from .errors import AlgebraMismatch, NotIdempotent, RelationViolation
from .linalg import Matrix, RowReducer
from .scalars import ONE, ZERO, CycScalar
from .structure import coproduct, e0_pm, e1_pm

_HALF = CycScalar(mpq(1, 2))


def gen_keys(alg: QAlgebra, ambient: str = "Q") -> list:
    """Generator labels: "K", ("+", j), ("-", j); A only uses j = 1."""
    n = 1 if ambient == "A" else alg.N
    keys: list = ["K"]
    for j in range(1, n + 1):
        keys += [("+", j), ("-", j)]
    return keys


def gen_element(alg: QAlgebra, key) -> AlgebraElement:
    if key == "K":
        return alg.K()
    sign, j = key
    return alg.fp(j) if sign == "+" else alg.fm(j)


def _key_name(key) -> str:
    return "K" if key == "K" else f"f{key[1]}{key[0]}"


class Rep:
    """A module given by generator matrices; relations are audited on construction."""

    def __init__(self, alg: QAlgebra, dim: int, gens: dict, ambient: str = "Q",
                 label: str = "", check: bool = True):
        self.alg = alg
        self.dim = dim
        self.ambient = ambient
        self.label = label
        self.gens = {k: gens[k] for k in gen_keys(alg, ambient)}
        self._words: dict = {}
        # data attached when the module is a left ideal H e
        self.ideal_basis: list[AlgebraElement] | None = None
        self.ideal_pivots: list[int] | None = None
        self.idempotent: AlgebraElement | None = None
        if check:
            bad = self.relation_failures()
            if bad:
                raise RelationViolation(f"{label or 'rep'}: relations fail: {', '.join(bad)}")

    def __repr__(self) -> str:
        return f"<Rep {self.label or '?'} dim={self.dim} over {self.ambient}{self.alg!r}>"

    # -- action ----------------------------------------------------------------

    def allowed_word(self, w: int) -> bool:
        if self.ambient == "Q":
            return True
        _, s, t = self.alg.unpack(w)
        return (s | t) <= 1

    def word_matrix(self, w: int) -> Matrix:
        mat = self._words.get(w)
        if mat is not None:
            return mat
        if not self.allowed_word(w):
            raise AlgebraMismatch(f"word {self.alg.word_str(w)} is not in A")
        m, s, t = self.alg.unpack(w)
        mat = Matrix.identity(self.dim)
        K = self.gens["K"]
        for _ in range(m):
            mat = mat @ K
        for j in range(self.alg.N):
            if s >> j & 1:
                mat = mat @ self.gens[("+", j + 1)]
            if t >> j & 1:
                mat = mat @ self.gens[("-", j + 1)]
        self._words[w] = mat
        return mat

    def act(self, x: AlgebraElement) -> Matrix:
        if x.alg is not self.alg:
            raise AlgebraMismatch("element and module live over different algebras")
        out = Matrix.zeros(self.dim)
        for w, c in x.terms.items():
            out = out + self.word_matrix(w).scale(c)
        return out

    def relation_failures(self) -> list[str]:
        n = self.dim
        one = Matrix.identity(n)
        K = self.gens["K"]
        bad = []
        if K @ K @ K @ K != one:
            bad.append("K^4 = 1")
        e1m = (one - K @ K).scale(_HALF)
        fs = [k for k in self.gens if k != "K"]
        for a in fs:
            fa = self.gens[a]
            if not (fa @ K + K @ fa).is_zero():
                bad.append(f"{{{_key_name(a)}, K}} = 0")
            for b in fs:
                fb = self.gens[b]
                anti = fa @ fb + fb @ fa
                want = e1m if (a[1] == b[1] and a[0] != b[0]) else Matrix.zeros(n)
                if anti != want:
                    bad.append(f"{{{_key_name(a)}, {_key_name(b)}}}")
        return bad

    def commutes_with_action(self, f: Matrix) -> bool:
        return all(f @ g == g @ f for g in self.gens.values())

    def to_json(self) -> dict:
        return {"label": self.label, "ambient": self.ambient, "dim": self.dim,
                "generators": {_key_name(k): m.to_json() for k, m in self.gens.items()}}


# -- constructors ---------------------------------------------------------------------

def _coords(vec: dict, pivots: list[int]) -> dict:
    return {i: vec[p] for i, p in enumerate(pivots) if p in vec}


def rep_from_idempotent(e: AlgebraElement, label: str = "", ambient: str = "Q") -> Rep:
    """The left ideal H e with left multiplication; H is Q or the subalgebra A."""
    alg = e.alg
    if e * e != e:
        raise NotIdempotent(f"{label or 'element'} is not idempotent")
    words = [w for w in alg.words()] if ambient == "Q" else \
        [w for w in alg.words() if (alg.unpack(w)[1] | alg.unpack(w)[2]) <= 1]
    rr = RowReducer()
    for w in words:
        rr.add(dict((alg.basis(w) * e).terms))
    pivots = sorted(rr.pivots)
    basis = [AlgebraElement(alg, dict(rr.pivots[p])) for p in pivots]
    gens = {}
    for key in gen_keys(alg, ambient):
        x = gen_element(alg, key)
        rows: dict = {}
        for col, v in enumerate(basis):
            img = (x * v).terms
            for row, c in _coords(img, pivots).items():
                rows.setdefault(row, {})[col] = c
        gens[key] = Matrix(len(basis), len(basis), rows)
    rep = Rep(alg, len(basis), gens, ambient, label)
    rep.ideal_basis = basis
    rep.ideal_pivots = pivots
    rep.idempotent = e
    return rep


def element_coords(rep: Rep, x: AlgebraElement) -> dict:
    """Coordinates of an element of the left ideal in the module basis."""
    return _coords(x.terms, rep.ideal_pivots)


def coords_element(rep: Rep, vec: dict) -> AlgebraElement:
    out = rep.alg.zero()
    for i, c in vec.items():
        out = out + rep.ideal_basis[i] * c
    return out


def regular_rep(alg: QAlgebra) -> Rep:
    return alg.cached("regular_rep", lambda: rep_from_idempotent(alg.one(), "Q"))


@dataclass
class SubRep:
    rep: Rep
    embedding: Matrix  # columns are the basis vectors in the ambient coordinates


def subrep(V: Rep, vectors: list[dict], label: str = "") -> SubRep:
    """The submodule generated by the given vectors."""
    rr = RowReducer()
    queue = list(vectors)
    gens = list(V.gens.values())
    while queue:
        v = queue.pop()
        red = rr.reduce(v)
        if not red:
            continue
        rr.add(red)
        for g in gens:
            queue.append(g.apply(v))
    pivots = sorted(rr.pivots)
    basis = [rr.pivots[p] for p in pivots]
    d = len(basis)
    new = {}
    for key, g in V.gens.items():
        rows: dict = {}
        for col, v in enumerate(basis):
            for row, c in _coords(g.apply(v), pivots).items():
                rows.setdefault(row, {})[col] = c
        new[key] = Matrix(d, d, rows)
    emb_rows: dict = {}
    for col, v in enumerate(basis):
        for row, c in v.items():
            emb_rows.setdefault(row, {})[col] = c
    return SubRep(Rep(V.alg, d, new, V.ambient, label), Matrix(V.dim, d, emb_rows))


def trivial_like(alg: QAlgebra, sign: int, ambient: str = "Q") -> Rep:
    """X0^+- : one-dimensional, K -> +-1, fermions -> 0."""
    gens = {}
    for key in gen_keys(alg, ambient):
        gens[key] = Matrix(1, 1, {0: {0: CycScalar(sign)}}) if key == "K" else Matrix.zeros(1)
    return Rep(alg, 1, gens, ambient, "X0+" if sign > 0 else "X0-")


def x1_idempotent(alg: QAlgebra, sign: int) -> AlgebraElement:
    """The primitive idempotent e1^+- TOP; on the e1 block each f_j^+ f_j^- is a projection."""
    return alg.cached(f"x1idem{sign > 0}", lambda: e1_pm(alg, sign) * top(alg))


def simple_modules(alg: QAlgebra) -> dict[str, Rep]:
    """X0^+, X0^-, X1^+, X1^- .

    X1^+- is the cyclic submodule of Q e1^+- generated by the vector e1^+- TOP.
    A generic vector of Q e1^+- generates all 2^N copies, so the generator
    has to be taken inside a single copy.
    """
    def build():
        out = {"X0+": trivial_like(alg, 1), "X0-": trivial_like(alg, -1)}
        for sign, name in ((1, "X1+"), (-1, "X1-")):
            big = copies_X1(alg, sign)
            vec = element_coords(big, x1_idempotent(alg, sign))
            out[name] = subrep(big, [vec], name).rep
        return out
    return alg.cached("simples", build)


def copies_X1(alg: QAlgebra, sign: int) -> Rep:
    """Q e1^+- , the direct sum of 2^N copies of X1^+-."""
    name = "2^N X1+" if sign > 0 else "2^N X1-"
    return alg.cached(f"rep_e1{sign}", lambda: rep_from_idempotent(e1_pm(alg, sign), name))


def projective_P0(alg: QAlgebra, sign: int) -> Rep:
    name = "P0+" if sign > 0 else "P0-"
    return alg.cached(f"rep_P0{sign}", lambda: rep_from_idempotent(e0_pm(alg, sign), name))


def projective_cover(alg: QAlgebra, simple: str) -> Rep:
    return {"X0+": lambda: projective_P0(alg, 1), "X0-": lambda: projective_P0(alg, -1),
            "X1+": lambda: simple_modules(alg)["X1+"],
            "X1-": lambda: simple_modules(alg)["X1-"]}[simple]()


def primitive_idempotent(alg: QAlgebra, simple: str) -> tuple[AlgebraElement, int]:
    """(e, copies) with H e = copies x P_U."""
    return {"X0+": (e0_pm(alg, 1), 1), "X0-": (e0_pm(alg, -1), 1),
            "X1+": (x1_idempotent(alg, 1), 1), "X1-": (x1_idempotent(alg, -1), 1)}[simple]


# -- P_mu ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MuMatrix:
    """mu = [[a^-, a^+], [b^-, b^+]]."""

    a_minus: CycScalar
    a_plus: CycScalar
    b_minus: CycScalar
    b_plus: CycScalar

    @classmethod
    def of(cls, am, ap, bm, bp) -> MuMatrix:
        c = CycScalar.coerce
        return cls(c(am), c(ap), c(bm), c(bp))

    def det(self) -> CycScalar:
        return self.a_minus * self.b_plus - self.a_plus * self.b_minus

    def a(self, eps: int) -> CycScalar:
        return self.a_plus if eps > 0 else self.a_minus

    def b(self, eps: int) -> CycScalar:
        return self.b_plus if eps > 0 else self.b_minus

    def label(self) -> str:
        return "Pmu[" + ",".join(x.pretty() for x in (self.a_minus, self.a_plus,
                                                     self.b_minus, self.b_plus)) + "]"


def _pmu_A_mats() -> dict:
    # basis v0, v1-, v1+, v2
    one, m1 = ONE, CycScalar(-1)
    K = Matrix(4, 4, {0: {0: one}, 1: {1: m1}, 2: {2: m1}, 3: {3: one}})
    fm = Matrix(4, 4, {1: {0: one}, 3: {2: one}})
    fp = Matrix(4, 4, {2: {0: one}, 3: {1: m1}})
    return {"K": K, ("+", 1): fp, ("-", 1): fm}


def p_mu(alg: QAlgebra, mu: MuMatrix) -> Rep:
    """The 4-dimensional lift P_mu of P0(A) to Q(2, beta)."""
    if alg.N != 2:
        raise AlgebraMismatch("P_mu is defined over Q(2, beta)")
    base = _pmu_A_mats()
    gens = dict(base)
    for eps, sign in ((1, "+"), (-1, "-")):
        gens[(sign, 2)] = base[("-", 1)].scale(mu.a(eps)) + base[("+", 1)].scale(mu.b(eps))
    return Rep(alg, 4, gens, "Q", mu.label())


def p0_A(alg: QAlgebra) -> Rep:
    """P0^+(A) in the basis v0, v1-, v1+, v2."""
    return Rep(alg, 4, _pmu_A_mats(), "A", "P0+(A)")


# -- operations ------------------------------------------------------------------------

def kron(a: Matrix, b: Matrix) -> Matrix:
    rows: dict = {}
    m = b.ncols
    for i, ra in a.rows.items():
        for k, rb in b.rows.items():
            row = rows.setdefault(i * b.nrows + k, {})
            for j, va in ra.items():
                for l, vb in rb.items():
                    row[j * m + l] = va * vb
    return Matrix(a.nrows * b.nrows, a.ncols * b.ncols, rows)


def tensor_rep(V: Rep, W: Rep, label: str | None = None) -> Rep:
    """V (x) W with the diagonal action through the coproduct."""
    if V.alg is not W.alg or V.ambient != W.ambient:
        raise AlgebraMismatch("tensor product of modules over different algebras")
    alg = V.alg
    gens = {}
    for key in gen_keys(alg, V.ambient):
        D = coproduct(gen_element(alg, key))
        acc = Matrix.zeros(V.dim * W.dim)
        for (w1, w2), c in D.terms.items():
            acc = acc + kron(V.word_matrix(w1), W.word_matrix(w2)).scale(c)
        gens[key] = acc
    return Rep(alg, V.dim * W.dim, gens, V.ambient, label or f"({V.label} x {W.label})")


def direct_sum(V: Rep, W: Rep, label: str | None = None) -> Rep:
    gens = {}
    for key in V.gens:
        rows = {i: dict(r) for i, r in V.gens[key].rows.items()}
        for i, r in W.gens[key].rows.items():
            rows[i + V.dim] = {j + V.dim: v for j, v in r.items()}
        gens[key] = Matrix(V.dim + W.dim, V.dim + W.dim, rows)
    return Rep(V.alg, V.dim + W.dim, gens, V.ambient, label or f"({V.label} + {W.label})")


def restrict(V: Rep) -> Rep:
    """Restriction of a Q(2, beta)-module to A."""
    if V.alg.N != 2 or V.ambient != "Q":
        raise AlgebraMismatch("restriction is defined for Q(2, beta)-modules")
    return Rep(V.alg, V.dim, V.gens, "A", f"Res({V.label})", check=False)


def hom_space(V: Rep, W: Rep) -> list[Matrix]:
    """Basis of the intertwiners V -> W (dim W x dim V matrices)."""
    if V.alg is not W.alg or V.ambient != W.ambient:
        raise AlgebraMismatch("Hom between modules over different algebras")
    dv, dw = V.dim, W.dim
    rr = RowReducer()
    for key in V.gens:
        gv, gw = V.gens[key], W.gens[key]
        gv_cols = gv.transpose().rows  # column j of gv: {k: gv[k][j]}
        for i in range(dw):
            gw_row = gw.rows.get(i, {})
            for j in range(dv):
                row: dict = {}
                for k, c in gv_cols.get(j, {}).items():
                    idx = i * dv + k
                    row[idx] = row.get(idx, ZERO) + c
                for k, c in gw_row.items():
                    idx = k * dv + j
                    row[idx] = row.get(idx, ZERO) - c
                if row:
                    rr.add(row)
    out = []
    for vec in rr.nullspace(dv * dw):
        rows: dict = {}
        for idx, c in vec.items():
            rows.setdefault(idx // dv, {})[idx % dv] = c
        out.append(Matrix(dw, dv, rows))
    return out


def matrix_rank(m: Matrix) -> int:
    rr = RowReducer()
    for r in m.rows.values():
        rr.add(r)
    return rr.rank


def has_invertible(homs: list[Matrix], n: int, tries: int = 4, seed: int = 0) -> bool:
    """Whether span(homs) contains an invertible n x n matrix.

    A seeded random combination is tested; finding an invertible one is a
    proof, and a miss over several draws from a large range means the
    determinant polynomial vanishes identically with overwhelming probability.
    """
    if not homs or homs[0].nrows != n or homs[0].ncols != n:
        return False
    rng = random.Random(seed)
    for _ in range(tries):
        acc = Matrix.zeros(n)
        for h in homs:
            acc = acc + h.scale(rng.randint(-10**6, 10**6))
        if matrix_rank(acc) == n:
            return True
    return False


def is_isomorphic(V: Rep, W: Rep) -> bool:
    return V.dim == W.dim and has_invertible(hom_space(V, W), V.dim)


SIMPLE_NAMES = ("X0+", "X0-", "X1+", "X1-")


def multiplicity(X: Rep, simple: str, method: str = "idempotent") -> int:
    """[X : U] = dim Hom(P_U, X).

    method "idempotent" uses Hom(H e, X) = e X, "hom" solves for intertwiners.
    """
    alg = X.alg
    if method == "hom":
        return len(hom_space(projective_cover(alg, simple), X))
    e, copies = primitive_idempotent(alg, simple)
    r = matrix_rank(X.act(e))
    assert r % copies == 0
    return r // copies


def grothendieck_class(X: Rep, method: str = "idempotent") -> dict[str, int]:
    return {u: multiplicity(X, u, method) for u in SIMPLE_NAMES}


def structure_constants(N: int) -> dict[tuple[str, str], dict[str, int]]:
    """Closed-form classes of U (x) V for simple U, V."""
    big = 1 << (2 * N - 1)

    def cls(**kw):
        d = dict.fromkeys(SIMPLE_NAMES, 0)
        d.update({k.replace("p", "+").replace("m", "-"): v for k, v in kw.items()})
        return d
    sign = {"X0+": 1, "X0-": -1, "X1+": 1, "X1-": -1}
    out = {}
    for u in SIMPLE_NAMES:
        for v in SIMPLE_NAMES:
            su, sv = sign[u], sign[v]
            s = su * sv
            if u[1] == "0" and v[1] == "0":
                d = cls(X0p=1) if s > 0 else cls(X0m=1)
            elif u[1] == "1" and v[1] == "1":
                d = cls(X0p=big, X0m=big)
            else:
                d = cls(X1p=1) if s > 0 else cls(X1m=1)
            out[(u, v)] = d
    return out


__all__ = [
    "Rep", "MuMatrix", "SubRep", "rep_from_idempotent", "regular_rep", "subrep", "simple_modules",
    "copies_X1", "projective_P0", "projective_cover", "primitive_idempotent", "p_mu", "p0_A",
    "tensor_rep", "direct_sum", "restrict", "hom_space", "has_invertible", "is_isomorphic",
    "multiplicity", "grothendieck_class", "structure_constants", "matrix_rank", "kron",
    "element_coords", "coords_element", "gen_keys", "gen_element", "SIMPLE_NAMES",
]
