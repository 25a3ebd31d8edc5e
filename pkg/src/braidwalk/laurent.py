"""Exact Laurent polynomials in q^(1/2) and q-combinatorics.

Exponents are stored doubled, so ``{3: 2}`` is ``2 q^(3/2)``.  Coefficients are
Python ints; nothing here touches floating point except :meth:`LaurentPoly.eval_complex`.
"""

from __future__ import annotations

import cmath
import operator
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            e, c = operator.index(e), operator.index(c)
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int, doubled_exp: int) -> LaurentPoly:
        return cls({doubled_exp: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def q_power(cls, k: int) -> LaurentPoly:
        """q^k for integer k."""
        return cls({2 * k: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def term_list(self) -> list[tuple[int, int]]:
        """(doubled exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, doubled_exp: int) -> int:
        return self._terms.get(doubled_exp, 0)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def on_integer_grid(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({-e * -n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, doubled: int) -> LaurentPoly:
        """Multiply by q^(doubled/2)."""
        return _raw({e + doubled: c for e, c in self._terms.items()})

    def invert_q(self) -> LaurentPoly:
        return _raw({-e: c for e, c in self._terms.items()})

    def at_one(self) -> int:
        return sum(self._terms.values())

    def eval_complex(self, z: complex) -> complex:
        if z == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at 0")
        root = cmath.sqrt(complex(z))
        return sum(c * root ** e for e, c in self._terms.items()) + 0j

    def divexact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ArithmeticError if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        dtop = other.max_exp()
        dlead = other._terms[dtop]
        dlow = other.min_exp()
        while rem:
            top = max(rem)
            if top - dtop < min(rem) - dlow:
                break
            c, r = divmod(rem[top], dlead)
            if r:
                raise ArithmeticError("inexact coefficient division")
            shift = top - dtop
            quot[shift] = c
            for e, dc in other._terms.items():
                v = rem.get(e + shift, 0) - c * dc
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise ArithmeticError("polynomial division is not exact")
        return LaurentPoly(quot)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "q"
            elif e % 2 == 0:
                mono = f"q^{e // 2}"
            else:
                mono = f"q^({e}/2)"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _raw(terms: dict[int, int]) -> LaurentPoly:
    # caller guarantees no zero coefficients
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = terms
    p._hash = None
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.q_power(1)
Q_HALF = LaurentPoly.monomial(1, 1)


def monomial(coeff: int, doubled_exp: int) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, doubled_exp)


def one_minus_q(k: int) -> LaurentPoly:
    """1 - q^k (zero when k = 0)."""
    return LaurentPoly([(0, 1), (2 * k, -1)])


def q_int(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return LaurentPoly({2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial via binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k).

    Returns zero outside 0 <= k <= n.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(2 * k)


def q_multinomial(n: int, parts: Iterable[int]) -> LaurentPoly:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    denom = ONE
    for p in parts:
        denom = denom * q_factorial(p)
    return q_factorial(n).divexact(denom)
