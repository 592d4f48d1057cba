"""Shared algebras, strategies and small oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from hypothesis import strategies as st

from sfqha.algebra import QAlgebra
from sfqha.scalars import CycScalar, admissible_exponents

ALL_BETAS = {N: admissible_exponents(N) for N in (1, 2, 3)}


@lru_cache(maxsize=None)
def algebra(N: int, k: int) -> QAlgebra:
    return QAlgebra(N, k)


def q(num: int, den: int = 1) -> CycScalar:
    return CycScalar(Fraction(num, den))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(CycScalar, rationals, rationals, rationals, rationals)
nonzero_scalars = scalars.filter(lambda x: not x.is_zero())


def elements(alg: QAlgebra, max_terms: int = 4):
    """Random sparse algebra elements with small rational coefficients."""
    words = st.integers(min_value=0, max_value=alg.dim - 1)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(bool)
    return st.dictionaries(words, coeffs, min_size=1, max_size=max_terms).map(
        lambda d: alg.elem({w: CycScalar(c) for w, c in d.items()}))


def coprime_pairs(max_p: int = 40):
    from math import gcd
    return st.tuples(st.integers(2, max_p), st.integers(1, max_p)).filter(
        lambda pq: gcd(*pq) == 1)
