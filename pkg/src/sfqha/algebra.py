"""The algebra Q(N, beta): normal-ordered words, elements and tensors.

A basis word K^m prod_j (f_j^+)^{s_j} (f_j^-)^{t_j} is packed into one int

    w = m | s << 2 | t << (2 + N)

with bit j-1 of s (resp. t) the exponent of f_j^+ (resp. f_j^-).  The product
of two words is a short list of (word, rational) pairs; the coefficients are
always in {+-1, +-1/2} because the only relations are

    {f, K} = 0,  {f_i^+, f_j^-} = delta_ij e1,  {f, f} = 0 otherwise,  K^4 = 1

and e1 = (1 - K^2)/2 is central.  beta never enters the multiplication; it
only shows up in the quasi-Hopf structure elements (see structure.py).
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Iterable, Iterator

from gmpy2 import mpq

from .errors import AlgebraMismatch, ArityMismatch
from .scalars import ONE, ZERO, BetaChoice, CycScalar, I, make_beta

_HALF = mpq(1, 2)
_MHALF = mpq(-1, 2)
_P1 = mpq(1)
_M1 = mpq(-1)

# Per-index block products.  A block is 0 (empty), 1 (f+), 2 (f-), 3 (f+ f-).
# Each entry lists (sign, carries_e1, resulting block).
_BLOCK = {
    (1, 1): (),
    (1, 2): ((1, False, 3),),
    (1, 3): (),
    (2, 1): ((1, True, 0), (-1, False, 3)),
    (2, 2): (),
    (2, 3): ((1, True, 2),),
    (3, 1): ((1, True, 1),),
    (3, 2): (),
    (3, 3): ((1, True, 3),),
}


class QAlgebra:
    """Q(N, beta) with beta = zeta8**k.  Immutable after construction."""

    def __init__(self, N: int, k: int):
        self.N = N
        self.k = k % 8
        self.beta = make_beta(BetaChoice(N, self.k))
        self.key = (N, self.k)
        self.mask = (1 << N) - 1
        self.tshift = 2 + N
        self.dim = 4 << (2 * N)
        self._wshift = 2 + 2 * N
        self._mul_cache: dict[int, tuple] = {}
        self._cache: dict[str, object] = {}
        self._lock = threading.RLock()
        self._cache_limit = 1 << 22

    def __repr__(self) -> str:
        return f"QAlgebra(N={self.N}, beta=zeta8^{self.k})"

    # -- words -------------------------------------------------------------

    def word(self, m: int = 0, s: int = 0, t: int = 0) -> int:
        return (m % 4) | (s << 2) | (t << self.tshift)

    def unpack(self, w: int) -> tuple[int, int, int]:
        return w & 3, (w >> 2) & self.mask, w >> self.tshift

    def words(self) -> range:
        return range(self.dim)

    def word_degree(self, w: int) -> int:
        return bin(w >> 2).count("1")

    def word_str(self, w: int) -> str:
        m, s, t = self.unpack(w)
        parts = []
        if m:
            parts.append("K" if m == 1 else f"K^{m}")
        for j in range(self.N):
            if s >> j & 1:
                parts.append(f"f{j + 1}+")
            if t >> j & 1:
                parts.append(f"f{j + 1}-")
        return " ".join(parts) if parts else "1"

    def word_mul(self, w1: int, w2: int) -> tuple:
        key = (w1 << self._wshift) | w2
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = self._word_product(w1, w2)
            if len(self._mul_cache) < self._cache_limit:
                self._mul_cache[key] = hit
        return hit

    def _word_product(self, w1: int, w2: int) -> tuple:
        N, mask, sh = self.N, self.mask, self.tshift
        m1, s1, t1 = w1 & 3, (w1 >> 2) & mask, w1 >> sh
        m2, s2, t2 = w2 & 3, (w2 >> 2) & mask, w2 >> sh
        xb = [((s1 >> j) & 1) | (((t1 >> j) & 1) << 1) for j in range(N)]
        yb = [((s2 >> j) & 1) | (((t2 >> j) & 1) << 1) for j in range(N)]
        xlen = [(b & 1) + (b >> 1) for b in xb]
        ylen = [(b & 1) + (b >> 1) for b in yb]
        # K^{m2} moves left past all of X.
        parity = (m2 * sum(xlen)) & 1
        # Y_j moves left past X_k for k > j.
        tail = 0
        for j in range(N - 1, -1, -1):
            parity ^= (ylen[j] * tail) & 1
            tail += xlen[j]
        branches = [(-1 if parity else 1, False, 0, 0)]
        for j in range(N):
            x, y = xb[j], yb[j]
            if y == 0:
                res = ((1, False, x),)
            elif x == 0:
                res = ((1, False, y),)
            else:
                res = _BLOCK[(x, y)]
                if not res:
                    return ()
            new = []
            for sg, e1, s, t in branches:
                for bs, be, blk in res:
                    new.append((sg * bs, e1 or be, s | ((blk & 1) << j), t | ((blk >> 1) << j)))
            branches = new
        m = (m1 + m2) & 3
        out = []
        for sg, e1, s, t in branches:
            base = (s << 2) | (t << sh)
            if e1:
                out.append((m | base, _HALF if sg > 0 else _MHALF))
                out.append((((m + 2) & 3) | base, _MHALF if sg > 0 else _HALF))
            else:
                out.append((m | base, _P1 if sg > 0 else _M1))
        return tuple(out)

    def leading_split(self, w: int) -> tuple[int, int] | None:
        """Return (g, rest) with w = g * rest exactly, g a generator word."""
        m, s, t = self.unpack(w)
        if m:
            return self.word(1), self.word(m - 1, s, t)
        for j in range(self.N):
            if s >> j & 1:
                return self.word(0, 1 << j), self.word(0, s & ~(1 << j), t)
            if t >> j & 1:
                return self.word(0, 0, 1 << j), self.word(0, s, t & ~(1 << j))
        return None

    # -- elements -----------------------------------------------------------

    def elem(self, terms: dict | None = None) -> AlgebraElement:
        return AlgebraElement(self, dict(terms or {}))

    def scalar(self, c) -> AlgebraElement:
        c = CycScalar.coerce(c)
        return AlgebraElement(self, {0: c} if c else {})

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {0: ONE})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def basis(self, w: int) -> AlgebraElement:
        return AlgebraElement(self, {w: ONE})

    def b(self, m: int, s: int, t: int) -> AlgebraElement:
        """The basis element b(m, s, t); s and t are bitmasks."""
        return self.basis(self.word(m, s, t))

    def K(self, power: int = 1) -> AlgebraElement:
        return self.basis(self.word(power))

    def fp(self, j: int) -> AlgebraElement:
        """f_j^+ (j counts from 1)."""
        return self.basis(self.word(0, 1 << (j - 1)))

    def fm(self, j: int) -> AlgebraElement:
        """f_j^- (j counts from 1)."""
        return self.basis(self.word(0, 0, 1 << (j - 1)))

    def f(self, sign: int, j: int) -> AlgebraElement:
        return self.fp(j) if sign > 0 else self.fm(j)

    def generators(self) -> list[AlgebraElement]:
        gens = [self.K()]
        for j in range(1, self.N + 1):
            gens += [self.fp(j), self.fm(j)]
        return gens

    def generator_names(self) -> list[str]:
        names = ["K"]
        for j in range(1, self.N + 1):
            names += [f"f{j}+", f"f{j}-"]
        return names

    def tensor(self, arity: int, terms: dict | None = None) -> TensorElement:
        return TensorElement(self, arity, dict(terms or {}))

    def tensor_one(self, arity: int) -> TensorElement:
        return TensorElement(self, arity, {(0,) * arity: ONE})

    def otimes(self, *factors: AlgebraElement) -> TensorElement:
        """Elementary tensor x1 (x) x2 (x) ..."""
        terms: dict = {}
        items = [list(f.terms.items()) for f in factors]
        for combo in itertools.product(*items):
            c = ONE
            for _, ci in combo:
                c = c * ci
            key = tuple(w for w, _ in combo)
            terms[key] = c
        return TensorElement(self, len(factors), {k: v for k, v in terms.items() if v})

    # -- cache --------------------------------------------------------------

    def cached(self, name: str, build):
        hit = self._cache.get(name)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._cache.get(name)
            if hit is None:
                hit = build()
                self._cache[name] = hit
        return hit


def _acc(acc: dict, key, value: CycScalar) -> None:
    old = acc.get(key)
    acc[key] = value if old is None else old + value


def _prune(acc: dict) -> dict:
    return {k: v for k, v in acc.items() if not v.is_zero()}


def _same(a: QAlgebra, b: QAlgebra) -> None:
    if a is not b and a.key != b.key:
        raise AlgebraMismatch(f"{a!r} vs {b!r}")


class AlgebraElement:
    """Sparse linear combination of basis words.  Treat as immutable."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: QAlgebra, terms: dict):
        self.alg = alg
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def __iter__(self) -> Iterator[tuple[int, CycScalar]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, w: int) -> CycScalar:
        return self.terms.get(w, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.alg.key == other.alg.key and self.terms == other.terms
        if isinstance(other, (int, CycScalar)):
            return self == self.alg.scalar(other)
        return NotImplemented

    __hash__ = None

    def __add__(self, other) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        _same(self.alg, other.alg)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _acc(acc, w, c)
        return AlgebraElement(self.alg, acc)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        c = CycScalar.coerce(other)
        return AlgebraElement(self.alg, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other) -> AlgebraElement:
        c = CycScalar.coerce(other)
        return AlgebraElement(self.alg, {w: c * v for w, v in self.terms.items()})

    def __pow__(self, n: int) -> AlgebraElement:
        if n < 0:
            raise ValueError("use an explicit inverse for negative powers")
        result = self.alg.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def commutator(self, other: AlgebraElement) -> AlgebraElement:
        return self * other - other * self

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            parts.append(f"({self.terms[w].pretty()}) {self.alg.word_str(w)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.alg!r} element, {len(self.terms)} terms>"


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _same(x.alg, y.alg)
    alg = x.alg
    wm = alg.word_mul
    acc: dict = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            prods = wm(w1, w2)
            if not prods:
                continue
            c = c1 * c2
            for w, r in prods:
                _acc(acc, w, c if r == 1 else c.scale(r))
    out = AlgebraElement.__new__(AlgebraElement)
    out.alg = alg
    out.terms = _prune(acc)
    return out


class TensorElement:
    """Sparse element of the k-fold tensor power of the algebra."""

    __slots__ = ("alg", "arity", "terms")

    def __init__(self, alg: QAlgebra, arity: int, terms: dict):
        self.alg = alg
        self.arity = arity
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    @classmethod
    def _raw(cls, alg, arity, terms) -> TensorElement:
        out = cls.__new__(cls)
        out.alg = alg
        out.arity = arity
        out.terms = terms
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TensorElement) -> None:
        _same(self.alg, other.alg)
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.alg.key == other.alg.key and self.arity == other.arity
                and self.terms == other.terms)

    __hash__ = None

    def __add__(self, other: TensorElement) -> TensorElement:
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _acc(acc, k, c)
        return TensorElement._raw(self.alg, self.arity, _prune(acc))

    def __neg__(self) -> TensorElement:
        return TensorElement._raw(self.alg, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, other) -> TensorElement:
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        c = CycScalar.coerce(other)
        return TensorElement._raw(self.alg, self.arity,
                                  _prune({k: v * c for k, v in self.terms.items()}))

    def __rmul__(self, other) -> TensorElement:
        c = CycScalar.coerce(other)
        return TensorElement._raw(self.alg, self.arity,
                                  _prune({k: c * v for k, v in self.terms.items()}))

    def __pow__(self, n: int) -> TensorElement:
        result = self.alg.tensor_one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def place(self, positions: Iterable[int], arity: int) -> TensorElement:
        """Put leg i of self into slot positions[i] of an arity-fold tensor.

        R.place((1, 0), 2) is R_21; Phi.place((1, 2, 0), 3) is Phi_231.
        """
        positions = tuple(positions)
        if len(positions) != self.arity or len(set(positions)) != self.arity:
            raise ArityMismatch("bad leg placement")
        terms = {}
        for key, c in self.terms.items():
            new = [0] * arity
            for i, p in enumerate(positions):
                new[p] = key[i]
            terms[tuple(new)] = c
        return TensorElement._raw(self.alg, arity, terms)

    def swap(self) -> TensorElement:
        return self.place((1, 0), 2)

    def leg_map(self, leg: int, fn) -> TensorElement:
        """Apply a linear map (word -> AlgebraElement) to one leg."""
        acc: dict = {}
        cache: dict = {}
        for key, c in self.terms.items():
            w = key[leg]
            img = cache.get(w)
            if img is None:
                img = cache[w] = fn(w)
            for w2, c2 in img.terms.items():
                _acc(acc, key[:leg] + (w2,) + key[leg + 1:], c * c2)
        return TensorElement._raw(self.alg, self.arity, _prune(acc))

    def leg_split(self, leg: int, fn) -> TensorElement:
        """Replace one leg by two using a map word -> TensorElement(2)."""
        acc: dict = {}
        cache: dict = {}
        for key, c in self.terms.items():
            w = key[leg]
            img = cache.get(w)
            if img is None:
                img = cache[w] = fn(w)
            for pair, c2 in img.terms.items():
                _acc(acc, key[:leg] + pair + key[leg + 1:], c * c2)
        return TensorElement._raw(self.alg, self.arity + 1, _prune(acc))

    def leg_scalar(self, leg: int, fn) -> TensorElement | AlgebraElement | CycScalar:
        """Contract one leg with a linear form given on words."""
        acc: dict = {}
        cache: dict = {}
        for key, c in self.terms.items():
            w = key[leg]
            val = cache.get(w)
            if val is None:
                val = cache[w] = fn(w)
            if val:
                _acc(acc, key[:leg] + key[leg + 1:], c * val)
        acc = _prune(acc)
        if self.arity == 1:
            return acc.get((), ZERO)
        if self.arity == 2:
            return AlgebraElement(self.alg, {k[0]: v for k, v in acc.items()})
        return TensorElement._raw(self.alg, self.arity - 1, acc)

    def leg(self, i: int) -> list[AlgebraElement]:
        """All distinct words occurring in leg i (as basis elements)."""
        return [self.alg.basis(w) for w in sorted({k[i] for k in self.terms})]

    def as_element(self) -> AlgebraElement:
        if self.arity != 1:
            raise ArityMismatch("not a 1-tensor")
        return AlgebraElement(self.alg, {k[0]: v for k, v in self.terms.items()})

    def multiply_legs(self, middle: AlgebraElement | None = None) -> AlgebraElement:
        """sum x_1 [middle] x_2 ... x_k as an algebra element."""
        alg = self.alg
        total: dict = {}
        for key, c in self.terms.items():
            part = alg.basis(key[0])
            for j, w in enumerate(key[1:]):
                if middle is not None and j == 0:
                    part = part * middle
                part = part * alg.basis(w)
            for w, v in part.terms.items():
                _acc(total, w, c * v)
        return AlgebraElement(alg, total)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            legs = " (x) ".join(self.alg.word_str(w) for w in key)
            parts.append(f"({self.terms[key].pretty()}) {legs}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[list(self.alg.unpack(w) for w in key), c.to_json()]
                for key, c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        return f"<{self.alg!r} {self.arity}-tensor, {len(self.terms)} terms>"


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    x._check(y)
    alg = x.alg
    wm = alg.word_mul
    acc: dict = {}
    if x.arity == 2:
        for (a1, a2), c1 in x.terms.items():
            for (b1, b2), c2 in y.terms.items():
                p1 = wm(a1, b1)
                if not p1:
                    continue
                p2 = wm(a2, b2)
                if not p2:
                    continue
                c = c1 * c2
                for w1, r1 in p1:
                    for w2, r2 in p2:
                        r = r1 * r2
                        _acc(acc, (w1, w2), c if r == 1 else c.scale(r))
        return TensorElement._raw(alg, 2, _prune(acc))
    for ka, c1 in x.terms.items():
        for kb, c2 in y.terms.items():
            legs = []
            for a, b in zip(ka, kb):
                p = wm(a, b)
                if not p:
                    break
                legs.append(p)
            else:
                c = c1 * c2
                for combo in itertools.product(*legs):
                    r = _P1
                    for _, ri in combo:
                        r = r * ri
                    _acc(acc, tuple(w for w, _ in combo), c if r == 1 else c.scale(r))
    return TensorElement._raw(alg, x.arity, _prune(acc))


def e0(alg: QAlgebra) -> AlgebraElement:
    return alg.cached("e0", lambda: (alg.one() + alg.K(2)) * CycScalar(mpq(1, 2)))


def e1(alg: QAlgebra) -> AlgebraElement:
    return alg.cached("e1", lambda: (alg.one() - alg.K(2)) * CycScalar(mpq(1, 2)))


def e_idem(alg: QAlgebra, n: int) -> AlgebraElement:
    return e0(alg) if n % 2 == 0 else e1(alg)


def omega(alg: QAlgebra, sign: int) -> AlgebraElement:
    """omega_+- = (e0 +- i e1) K."""
    def build():
        return (e0(alg) + e1(alg) * (I if sign > 0 else -I)) * alg.K()
    return alg.cached(f"omega{sign > 0}", build)


def top(alg: QAlgebra) -> AlgebraElement:
    """TOP = prod_j f_j^+ f_j^-."""
    return alg.b(0, alg.mask, alg.mask)


def fpfm(alg: QAlgebra, j: int) -> AlgebraElement:
    return alg.fp(j) * alg.fm(j)


def pair_product(alg: QAlgebra, s: int) -> AlgebraElement:
    """prod_j (f_j^+ f_j^-)^{s_j} for a bitmask s."""
    return alg.b(0, s, s)


def counit_word(alg: QAlgebra, w: int) -> CycScalar:
    return ONE if (w >> 2) == 0 else ZERO


def counit(x: AlgebraElement) -> CycScalar:
    total = ZERO
    for w, c in x.terms.items():
        if (w >> 2) == 0:
            total = total + c
    return total
