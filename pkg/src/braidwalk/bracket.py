"""Jones polynomial of a braid closure by the Kauffman bracket state sum.

Independent of the walk machinery: only BraidWord and LaurentPoly are shared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .braid import BraidWord
from .errors import ResourceLimitError
from .laurent import LaurentPoly

DEFAULT_STATE_LIMIT = 20


@dataclass(frozen=True)
class PlanarDiagram:
    """Closure diagram with edges = column segments between crossings.

    ``crossings[k] = (sign, nw, ne, sw, se)`` with edge ids at the four corners;
    ``free_loops`` counts columns that meet no crossing.
    """

    n_edges: int
    crossings: tuple[tuple[int, int, int, int, int], ...]
    free_loops: int


def braid_closure_pd(b: BraidWord) -> PlanarDiagram:
    m = b.width
    hits: dict[int, list[int]] = {c: [] for c in range(1, m + 1)}
    for t, (i, _) in enumerate(b.letters, start=1):
        hits[i].append(t)
        hits[i + 1].append(t)
    base = {}
    n = 0
    for c in range(1, m + 1):
        base[c] = n
        n += len(hits[c])
    # in column c with crossings t_0 < ... < t_{k-1}, edge j runs from below t_j
    # down (through the closure, for j = k-1) to above t_{j+1}
    pos = {(c, t): j for c in hits for j, t in enumerate(hits[c])}

    def below(c, t):
        return base[c] + pos[(c, t)]

    def above(c, t):
        k = len(hits[c])
        return base[c] + (pos[(c, t)] - 1) % k

    crossings = []
    for t, (i, s) in enumerate(b.letters, start=1):
        crossings.append((s, above(i, t), above(i + 1, t), below(i, t), below(i + 1, t)))
    free = sum(1 for c in hits if not hits[c])
    return PlanarDiagram(n, tuple(crossings), free)


def _loops(pd: PlanarDiagram, vertical_mask: int) -> int:
    parent = list(range(pd.n_edges))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = pd.n_edges
    for k, (_, nw, ne, sw, se) in enumerate(pd.crossings):
        pairs = ((nw, sw), (ne, se)) if vertical_mask >> k & 1 else ((nw, ne), (sw, se))
        for x, y in pairs:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
                comps -= 1
    return comps + pd.free_loops


def bracket_histogram(b: BraidWord, limit: int = DEFAULT_STATE_LIMIT) -> Counter:
    """Counter over states of (#A - #B, loop count)."""
    L = len(b)
    if L > limit:
        raise ResourceLimitError(f"{L} crossings means 2^{L} states; limit is {limit}")
    pd = braid_closure_pd(b)
    positive = sum(1 << k for k, c in enumerate(pd.crossings) if c[0] > 0)
    hist: Counter = Counter()
    for state in range(1 << L):
        # bit k set = A-smoothing at crossing k; A is the oriented (vertical)
        # smoothing at a positive crossing and the horizontal one at a negative one
        vertical = ~(state ^ positive) & ((1 << L) - 1)
        a = bin(state).count("1")
        hist[(a - (L - a), _loops(pd, vertical))] += 1
    return hist


def _apoly_mul(p: dict, r: dict) -> dict:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def jones_via_bracket(b: BraidWord, limit: int = DEFAULT_STATE_LIMIT) -> LaurentPoly:
    """V(t) of the closure of ``b`` with q = t, normalised so the unknot gives 1."""
    hist = bracket_histogram(b, limit)
    delta = {2: -1, -2: -1}
    powers = {0: {0: 1}}
    total: dict[int, int] = {}
    for (a_exp, loops), count in hist.items():
        k = loops - 1
        while k not in powers:
            j = max(powers)
            powers[j + 1] = _apoly_mul(powers[j], delta)
        for e, c in powers[k].items():
            total[e + a_exp] = total.get(e + a_exp, 0) + c * count
    w = b.writhe()
    # (-A^3)^(-w)
    sign = -1 if w % 2 else 1
    total = {e - 3 * w: c * sign for e, c in total.items() if c}
    # A = t^(-1/4): A^e = t^(-e/4), doubled t exponent -e/2
    out = {}
    for e, c in total.items():
        if e % 2:
            raise ArithmeticError("odd A exponent in bracket; not a braid closure?")
        out[-e // 2] = c
    return LaurentPoly(out)
