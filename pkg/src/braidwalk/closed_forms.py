"""Closed-form colored Jones sums for 5_2, 6_1 and 7_2.

Each knot has a ``verbatim`` variant transcribed exactly as printed and, where
the printed formula disagrees with the walk derivation, a ``corrected`` one.
The matching braid words are in ``EXAMPLE_WORDS``.
"""

from __future__ import annotations

from typing import Callable

from .braid import BraidWord
from .laurent import ONE, ZERO, LaurentPoly, one_minus_q, q_binomial, q_multinomial

EXAMPLE_WORDS = {
    "5_2": BraidWord.from_ints([-2, 1, 2, 2, 2, 1]),
    "6_1": BraidWord.from_ints([1, 2, -1, -3, 2, -3, 1]),
    "7_2": BraidWord.from_ints([1, 2, 3, 3, 3, -1, 2, 1, -3]),
}

VARIANTS = ("verbatim", "corrected")


def _prod(ks) -> LaurentPoly:
    out = ONE
    for k in ks:
        out = out * one_minus_q(k)
    return out


def _check(N: int, variant: str) -> None:
    if N < 2:
        raise ValueError("color N must be >= 2")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def cjp_5_2(N: int, variant: str = "corrected") -> LaurentPoly:
    """q^(N-1) sum_{n<N} sum_{k<=n} [n,k]_q q^(nN+k(k+1)) prod_{i<=n}(1-q^(N-i)) prod_{i<=n-k}(1-q^(x+i-N)).

    Printed: x = n.  Applying the evaluation lemma to (bc)^k a^(n-k) gives x = k.
    """
    _check(N, variant)
    total = ZERO
    for n in range(N):
        head = _prod(N - i for i in range(1, n + 1))
        for k in range(n + 1):
            x = n if variant == "verbatim" else k
            tail = _prod(x + i - N for i in range(1, n - k + 1))
            total = total + q_binomial(n, k) * head * tail * LaurentPoly.q_power(n * N + k * (k + 1))
    return total * LaurentPoly.q_power(N - 1)


def _triple(
    N: int, prefactor: int, exponent: Callable[[int, int, int], int], head_k: Callable[[int], int]
) -> LaurentPoly:
    total = ZERO
    for n in range(N):
        head = _prod(head_k(i) for i in range(1, n + 1))
        for m in range(n + 1):
            for k in range(m + 1):
                coeff = q_multinomial(n, (n - m, m - k, k))
                p2 = _prod(n - m + i - N for i in range(1, m - k + 1))
                p3 = _prod(n - k + i - N for i in range(1, k + 1))
                total = total + coeff * head * p2 * p3 * LaurentPoly.q_power(exponent(n, m, k))
    return total * LaurentPoly.q_power(prefactor)


def cjp_6_1(N: int, variant: str = "corrected") -> LaurentPoly:
    """q^(1-N) sum [n; n-m, m-k, k]_q q^(3n-k-m+(n-k)^2+(n-m)^2) prod(1-q^(i-N)) prod(1-q^(n-m+i-N)) prod(1-q^(n-k+i-N)).

    The printed final formula agrees with the derivation, so both variants coincide.
    """
    _check(N, variant)
    return _triple(
        N,
        1 - N,
        lambda n, m, k: 3 * n - k - m + (n - k) ** 2 + (n - m) ** 2,
        lambda i: i - N,
    )


def cjp_7_2(N: int, variant: str = "corrected") -> LaurentPoly:
    """q^(N-1) sum [n; n-m, m-k, k]_q q^(nN+2n-m-k+(n-k)^2+(n-m)^2) prod(1-q^(N-i)) prod(1-q^(n-m+i-N)) prod(1-q^(n-k+i-N))."""
    _check(N, variant)
    return _triple(
        N,
        N - 1,
        lambda n, m, k: n * N + 2 * n - m - k + (n - k) ** 2 + (n - m) ** 2,
        lambda i: N - i,
    )


CLOSED_FORMS: dict[str, Callable[..., LaurentPoly]] = {
    "5_2": cjp_5_2,
    "6_1": cjp_6_1,
    "7_2": cjp_7_2,
}


def closed_form(tag: str, N: int, variant: str = "corrected") -> LaurentPoly:
    try:
        fn = CLOSED_FORMS[tag]
    except KeyError:
        raise ValueError(f"no closed form for {tag!r}; choose from {sorted(CLOSED_FORMS)}") from None
    return fn(N, variant)
