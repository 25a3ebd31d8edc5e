"""Simple-walk counts on the (2,n) and (3,n) torus braids.

With the crossing convention fixed by the worked examples and the knot tables,
sigma_1^-n gives the Fibonacci counts 1, 2, 3, 5, ... but the sequence
0, 1, 4, 5, 10, ... attributed to (sigma_1^-1 sigma_2^-1)^n is produced by its
mirror (sigma_1 sigma_2)^n.  The literal word gives 2, 5, 10, 17, ..., another
tribonacci sequence.  ``count_series`` therefore counts family 3 on the mirror
by default; pass ``mirror=False`` for the literal word.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, reflect
from .errors import DomainError, ResourceLimitError
from .walks import DEFAULT_LIMIT, count_simple_walks

FLOAT_TOL = 1e-6
FLOAT_CHECK_MAX = 30  # double precision cannot hold 1e-6 absolute much past this


def torus2_braid(n: int) -> BraidWord:
    """sigma_1^(-n) on two strands."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return BraidWord.from_ints([-1] * n, 2)


def torus3_braid(n: int, sign: int = -1) -> BraidWord:
    """(sigma_1^s sigma_2^s)^n on three strands, s = -1 by default."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return BraidWord.from_ints([sign, 2 * sign] * n, 3)


@lru_cache(maxsize=None)
def _f_exact(n: int) -> int:
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def f_closed_float(n: int) -> float:
    r5 = math.sqrt(5.0)
    return (5 + r5) / 10 * ((1 + r5) / 2) ** n + (5 - r5) / 10 * ((1 - r5) / 2) ** n


def closed_form_f(n: int) -> int:
    """f(n) from the recurrence f(n) = f(n-1) + f(n-2), f(1) = 1, f(2) = 2.

    The radical formula is evaluated alongside and must round to the same value.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    exact = _f_exact(n)
    if n > FLOAT_CHECK_MAX:
        return exact
    approx = f_closed_float(n)
    if abs(approx - exact) > FLOAT_TOL:
        raise ArithmeticError(f"closed form f({n}) = {approx} drifted from {exact}")
    return exact


def tribonacci(n: int) -> int:
    """T(0), T(1), T(2), ... = 0, 1, 1, 2, 4, 7, 13, ...; T(-1) = 0 by running the recurrence back."""
    if n < -1:
        raise DomainError(f"n must be >= -1, got {n}")
    if n == -1:
        return 0
    a, b, c = 0, 1, 1
    for _ in range(n):
        a, b, c = b, c, a + b + c
    return a


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1 / 3), x)


def tribonacci_roots() -> tuple[complex, complex, complex]:
    """Roots of t^3 - t^2 - t - 1 by radicals: the real root first."""
    r33 = math.sqrt(33.0)
    alpha = (1 + _cbrt(19 + 3 * r33) + _cbrt(19 - 3 * r33)) / 3
    disc = cmath.sqrt(-3 * alpha**2 + 2 * alpha + 5)
    return complex(alpha), (1 - alpha + disc) / 2, (1 - alpha - disc) / 2


def g_closed_complex(n: int, variant: str = "corrected") -> complex:
    """sum_i c_i r_i^e with c_i = (1 + 3/r_i) / (-r_i^2 + 4 r_i - 1).

    ``verbatim`` uses e = n, which equals T(n) + 3T(n-1) = g(n+1) when T(0) = 0.
    ``corrected`` uses e = n - 1, matching g(1..3) = 0, 1, 4.
    """
    if variant not in ("verbatim", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    e = n if variant == "verbatim" else n - 1
    total = 0j
    for root in tribonacci_roots():
        total += (1 + 3 / root) / (-(root**2) + 4 * root - 1) * root**e
    return total


@lru_cache(maxsize=None)
def _g_exact(n: int) -> int:
    seq = [0, 1, 4]
    while len(seq) < n:
        seq.append(seq[-1] + seq[-2] + seq[-3])
    return seq[n - 1]


def closed_form_g(n: int) -> int:
    """g(n) from g(n) = g(n-1) + g(n-2) + g(n-3), g(1..3) = 0, 1, 4.

    Equals T(n-1) + 3T(n-2) for the tribonacci numbers T(0), T(1), ... = 0, 1, 1, ...
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    exact = _g_exact(n)
    if n > FLOAT_CHECK_MAX:
        return exact
    approx = g_closed_complex(n)
    if abs(approx - exact) > FLOAT_TOL:
        raise ArithmeticError(f"closed form g({n}) = {approx} drifted from {exact}")
    return exact


@dataclass
class SeriesReport:
    family: int
    counts: list[int]
    recurrence_ok: bool
    closedform_ok: bool
    notes: list[str] = field(default_factory=list)
    mirror: bool = False

    def rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.counts, start=1))


def series_braid(family: int, n: int, mirror: bool | None = None) -> BraidWord:
    """The braid counted for ``family`` at ``n`` (see the module docstring for ``mirror``)."""
    if family == 2:
        b = torus2_braid(n)
        return reflect(b) if mirror else b
    if family == 3:
        return torus3_braid(n, sign=1 if (mirror is None or mirror) else -1)
    raise DomainError(f"family must be 2 or 3, got {family}")


def count_series(
    family: int, n_max: int, limit: int = DEFAULT_LIMIT, mirror: bool | None = None
) -> SeriesReport:
    """Enumerate |SW| for n = 1..n_max and check recurrence and closed form."""
    if family not in (2, 3):
        raise DomainError(f"family must be 2 or 3, got {family}")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if mirror is None:
        mirror = family == 3
    closed, order, start = (closed_form_f, 2, 3) if family == 2 else (closed_form_g, 3, 4)
    counts: list[int] = []
    for n in range(1, n_max + 1):
        try:
            counts.append(count_simple_walks(series_braid(family, n, mirror), limit=limit))
        except ResourceLimitError as exc:
            partial = SeriesReport(family, counts, False, False, [f"stopped at n={n}: {exc}"], mirror)
            raise ResourceLimitError(str(exc), partial=partial) from exc
    recurrence_ok = all(
        counts[n - 1] == sum(counts[n - 1 - j] for j in range(1, order + 1))
        for n in range(start, n_max + 1)
    )
    closedform_ok = all(c == closed(n) for n, c in enumerate(counts, start=1))
    notes = ["counted on the mirror word"] if mirror else []
    return SeriesReport(family, counts, recurrence_ok, closedform_ok, notes, mirror)


def extend_by_recurrence(counts: list[int], family: int, n_max: int) -> list[int]:
    """Continue enumerated counts past the enumeration limit using the recurrence."""
    order = 2 if family == 2 else 3
    out = list(counts)
    if len(out) < order:
        raise ValueError(f"need at least {order} seed values")
    while len(out) < n_max:
        out.append(sum(out[-order:]))
    return out
