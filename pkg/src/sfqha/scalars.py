"""Exact arithmetic in the cyclotomic field Q(zeta8) = Q[x]/(x^4 + 1).

An element is stored as four rationals (c0, c1, c2, c3) standing for
c0 + c1*z + c2*z^2 + c3*z^3 with z = zeta8.  Since z^4 = -1 every
element has exactly one such coefficient vector, so equality is
coefficient-wise.  i = z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

from .errors import DivisionByZero, InvalidBeta

_Q0 = mpq(0)
_Q1 = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, str):
        return mpq(Fraction(x.strip()))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


class CycScalar:
    """An exact element of Q(zeta8).  Immutable."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_to_mpq(c0), _to_mpq(c1), _to_mpq(c2), _to_mpq(c3))

    @classmethod
    def _raw(cls, c: tuple) -> CycScalar:
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def coerce(cls, x) -> CycScalar:
        if isinstance(x, CycScalar):
            return x
        return cls._raw((_to_mpq(x), _Q0, _Q0, _Q0))

    @classmethod
    def zeta_power(cls, k: int) -> CycScalar:
        """zeta8**k for any integer k."""
        k %= 8
        sign = _Q1
        if k >= 4:
            k -= 4
            sign = -_Q1
        c = [_Q0] * 4
        c[k] = sign
        return cls._raw(tuple(c))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        c = self.c
        return not (c[0] or c[1] or c[2] or c[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        c = self.c
        return not (c[1] or c[2] or c[3])

    def __eq__(self, other) -> bool:
        if isinstance(other, CycScalar):
            return self.c == other.c
        try:
            other = CycScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> CycScalar:
        if not isinstance(other, CycScalar):
            other = CycScalar.coerce(other)
        a, b = self.c, other.c
        return CycScalar._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        a = self.c
        return CycScalar._raw((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other) -> CycScalar:
        if not isinstance(other, CycScalar):
            other = CycScalar.coerce(other)
        a, b = self.c, other.c
        return CycScalar._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other) -> CycScalar:
        return CycScalar.coerce(other) - self

    def __mul__(self, other) -> CycScalar:
        if not isinstance(other, CycScalar):
            try:
                r = _to_mpq(other)
            except (TypeError, ValueError):
                return NotImplemented
            a = self.c
            return CycScalar._raw((a[0] * r, a[1] * r, a[2] * r, a[3] * r))
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = other.c
        return CycScalar._raw((
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
        ))

    __rmul__ = __mul__

    def scale(self, r: mpq) -> CycScalar:
        a = self.c
        return CycScalar._raw((a[0] * r, a[1] * r, a[2] * r, a[3] * r))

    def inverse(self) -> CycScalar:
        return cyc_inv(self)

    def __truediv__(self, other) -> CycScalar:
        return self * cyc_inv(CycScalar.coerce(other))

    def __rtruediv__(self, other) -> CycScalar:
        return CycScalar.coerce(other) * cyc_inv(self)

    def __pow__(self, n: int) -> CycScalar:
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = cyc_inv(self)
            n = -n
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, j: int) -> CycScalar:
        """Image under the automorphism zeta8 -> zeta8**j (j odd)."""
        if j % 2 == 0:
            raise ValueError("automorphism exponent must be odd")
        out = ZERO
        for k, ck in enumerate(self.c):
            if ck:
                out = out + CycScalar.zeta_power(j * k).scale(ck)
        return out

    # -- output ---------------------------------------------------------

    def to_json(self) -> list[str]:
        return [_fmt_q(x) for x in self.c]

    def tuple_str(self) -> str:
        return "(" + ",".join(_fmt_q(x) for x in self.c) + ")"

    def pretty(self) -> str:
        names = ("", "zeta", "i", "i*zeta")
        parts = []
        for k, ck in enumerate(self.c):
            if not ck:
                continue
            mag = abs(ck)
            if k == 0:
                body = _fmt_q(mag)
            elif mag == 1:
                body = names[k]
            else:
                body = f"{_fmt_q(mag)}*{names[k]}"
            parts.append(("-" if ck < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycScalar{self.tuple_str()}"

    def __str__(self) -> str:
        return self.pretty()


def _fmt_q(x: mpq) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


ZERO = CycScalar()
ONE = CycScalar(1)
I = CycScalar.zeta_power(2)
ZETA = CycScalar.zeta_power(1)


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


def cyc_inv(a: CycScalar) -> CycScalar:
    """Inverse via the norm down to Q(i) and then to Q."""
    if a.is_zero():
        raise DivisionByZero("inverse of zero in Q(zeta8)")
    a0, a1, a2, a3 = a.c
    if not (a1 or a2 or a3):
        return CycScalar._raw((1 / a0, _Q0, _Q0, _Q0))
    # sigma5: zeta -> -zeta fixes Q(i), so a * sigma5(a) lies in Q(i).
    s5 = CycScalar._raw((a0, -a1, a2, -a3))
    b = a * s5
    b0, b2 = b.c[0], b.c[2]
    norm = b0 * b0 + b2 * b2
    bconj = CycScalar._raw((b0 / norm, _Q0, -b2 / norm, _Q0))
    return s5 * bconj


def parse_scalar(text: str) -> CycScalar:
    """Parse "c0,c1,c2,c3" (optionally parenthesised) or a single rational."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    parts = [p for p in t.split(",")]
    if len(parts) == 1:
        return CycScalar(parts[0])
    if len(parts) != 4:
        raise ValueError(f"expected 1 or 4 rational components, got {text!r}")
    return CycScalar(*parts)


@dataclass(frozen=True)
class BetaChoice:
    """beta = zeta8**k for the algebra with N fermion pairs."""

    N: int
    k: int

    def admissible(self) -> bool:
        return self.N >= 1 and (self.k % 2) == (self.N % 2)


def admissible_exponents(N: int) -> list[int]:
    """The four k in 0..7 with (zeta8**k)**4 = (-1)**N."""
    return [k for k in range(8) if k % 2 == N % 2]


def make_beta(choice: BetaChoice) -> CycScalar:
    if choice.N < 1:
        raise InvalidBeta(f"N must be positive, got {choice.N}")
    if not choice.admissible():
        raise InvalidBeta(
            f"beta = zeta8^{choice.k} has beta^4 = {(-1) ** choice.k}, "
            f"need (-1)^N = {(-1) ** choice.N}"
        )
    beta = CycScalar.zeta_power(choice.k)
    assert beta ** 4 == CycScalar((-1) ** choice.N)
    return beta
