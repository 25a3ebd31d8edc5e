"""Simple walks on braid words.

A cell ``(level, column)`` is one vertical segment of the braid: level 0 is
above crossing 1, level t is the gap below crossing t, level ``length`` is the
bottom.  A simple walk is determined by its set of active crossings (its
monomial) together with the colour of every closure component that meets no
active crossing.  Such free components only occur for links; each one away
from column 1 may be walked (red) or not.  Validity is decided by 2-colouring
the partially smoothed closure.

Paths are traced upward with this table, for a crossing on columns i, i+1:

    sign  enter   stay        jump (active only)
    +1    i       c -> i+1    a -> i
    +1    i+1     b -> i      -
    -1    i+1     c -> i      a -> i+1
    -1    i       b -> i+1    -
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .braid import BraidLetter, BraidWord, reflect
from .errors import ResourceLimitError

Cell = tuple[int, int]

DEFAULT_LIMIT = 24
_CHUNK = 1 << 15

RED, BLACK = "red", "black"


@dataclass(frozen=True)
class Coloring:
    valid: bool
    red: frozenset = frozenset()
    black: frozenset = frozenset()
    reason: str | None = None
    free: tuple[int, ...] = ()  # smallest top column of each free component


@dataclass(frozen=True, order=True)
class SimpleWalk:
    monomial: tuple[int, ...]
    J: tuple[int, ...]
    pi: tuple[int, ...]
    local_words: tuple[tuple[int, tuple[str, ...]], ...] = field(compare=False)
    cells: frozenset = field(compare=False)

    @property
    def inversions(self) -> int:
        return sum(1 for x, y in itertools.combinations(self.pi, 2) if x > y)

    @property
    def qpow(self) -> int:
        return len(self.J) + self.inversions

    @property
    def sign(self) -> int:
        # (-1)(-q)^k = (-1)^(k+1) q^k
        return -1 if self.qpow % 2 == 0 else 1

    def word(self, crossing: int) -> tuple[str, ...]:
        return dict(self.local_words).get(crossing, ())

    def key(self):
        return (self.monomial, self.J, self.pi, self.local_words, self.cells)

    def weight_string(self) -> str:
        k = self.qpow
        pre = ("-" if self.sign < 0 else "") + ("q" if k == 1 else f"q^{k}")
        letters = [f"{x}_{t}" for t, word in self.local_words for x in word]
        return pre + " · " + " ".join(letters)


@dataclass(frozen=True)
class WalkCensus:
    braid: BraidWord
    walks: tuple[SimpleWalk, ...]

    @property
    def count(self) -> int:
        return len(self.walks)

    def monomials(self) -> frozenset:
        return frozenset(w.monomial for w in self.walks)

    def dump(self) -> str:
        lines = []
        for w in self.walks:
            lines.append(f"{list(w.monomial)}\t{list(w.J)}\t{list(w.pi)}\t{w.weight_string()}")
        return "\n".join(lines)


def step(letter: BraidLetter, col: int, active: bool) -> tuple[str | None, int]:
    """Move one crossing upward from ``col``; letter is None if the column is not involved."""
    i, s = letter
    if col != i and col != i + 1:
        return None, col
    over = i if s > 0 else i + 1
    if col == over:
        if active:
            return "a", col
        return "c", (i + 1 if s > 0 else i)
    return "b", (i if s > 0 else i + 1)


# --- colouring, one monomial at a time -------------------------------------


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def color_from_monomial(b: BraidWord, mono: Iterable[int], red_free: Iterable[int] = ()) -> Coloring:
    """Colour the cells of ``b`` after smoothing the active crossings in ``mono``.

    ``red_free`` names free components (by their smallest top column) to colour
    red; the remaining free components are black.
    """
    active = frozenset(mono)
    L, m = len(b), b.width
    dsu = _DSU()
    for t, (i, s) in enumerate(b.letters, start=1):
        for c in range(1, m + 1):
            if c != i and c != i + 1:
                dsu.union((t - 1, c), (t, c))
        if t in active:
            dsu.union((t - 1, i), (t, i))
            dsu.union((t - 1, i + 1), (t, i + 1))
        else:
            dsu.union((t, i), (t - 1, i + 1))
            dsu.union((t, i + 1), (t - 1, i))
    for p in range(1, m + 1):
        dsu.union((L, p), (0, p))

    colour: dict = {}
    for t in sorted(active):
        i, s = b.letters[t - 1]
        red_col, black_col = (i, i + 1) if s > 0 else (i + 1, i)
        for col, c in ((red_col, RED), (black_col, BLACK)):
            root = dsu.find((t, col))
            if colour.setdefault(root, c) != c:
                return Coloring(False, reason=f"red and black collide at crossing {t}")
    if colour.setdefault(dsu.find((0, 1)), BLACK) == RED:
        return Coloring(False, reason="first strand is red")

    free = {}
    for c in range(1, m + 1):
        root = dsu.find((0, c))
        if root not in colour:
            free.setdefault(root, c)
    free_cols = tuple(sorted(free.values()))
    for c in red_free:
        if c not in free_cols:
            raise ValueError(f"column {c} is not the label of a free component")
        colour[dsu.find((0, c))] = RED

    red, black = set(), set()
    for level in range(L + 1):
        for c in range(1, m + 1):
            if colour.get(dsu.find((level, c))) == RED:
                red.add((level, c))
            else:
                black.add((level, c))
    return Coloring(True, frozenset(red), frozenset(black), free=free_cols)


def _trace_path(b: BraidWord, start: int, active: frozenset):
    L = len(b)
    col = start
    cells = [(L, col)]
    letters = []
    for t in range(L, 0, -1):
        x, col = step(b.letters[t - 1], col, t in active)
        if x is not None:
            letters.append((t, x))
        cells.append((t - 1, col))
    return col, letters, cells


def trace_walk(
    b: BraidWord, mono: Iterable[int], coloring: Coloring | None = None, red_free: Iterable[int] = ()
) -> SimpleWalk:
    """Reconstruct the full walk for a valid monomial by tracing red paths upward."""
    active = frozenset(mono)
    if coloring is None:
        coloring = color_from_monomial(b, active, red_free)
    assert coloring.valid, coloring.reason
    L = len(b)
    J = tuple(p for p in range(1, b.width + 1) if (L, p) in coloring.red)
    assert J and 1 not in J
    pi = []
    words: dict[int, list[str]] = {}
    cells: set = set()
    jumps = set()
    for j in J:  # ascending start column = left-to-right order
        exit_col, letters, path_cells = _trace_path(b, j, active)
        pi.append(exit_col)
        for t, x in letters:
            words.setdefault(t, []).append(x)
            if x == "a":
                jumps.add(t)
        for cell in path_cells:
            assert cell in coloring.red, f"trace left the red arcs at {cell}"
            assert cell not in cells, f"paths share cell {cell}"
            cells.add(cell)
    assert sorted(pi) == list(J)
    assert jumps == active
    assert cells == coloring.red
    return SimpleWalk(
        monomial=tuple(sorted(active)),
        J=J,
        pi=tuple(pi),
        local_words=tuple((t, tuple(words[t])) for t in sorted(words)),
        cells=frozenset(cells),
    )


# --- vectorised sweep over all monomials -----------------------------------


def _valid_masks(b: BraidWord, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """Bitmasks in [start, stop) whose colouring is valid, with their free-component counts.

    Bit t-1 is crossing t.  Same colouring rule as :func:`color_from_monomial`,
    expressed on strand labels: each column carries the bottom column its
    smoothed strand started from, and closure components are the cycles of the
    top-level labels.
    """
    m = b.width
    masks = np.arange(start, stop, dtype=np.int64)
    n = len(masks)
    labels = np.tile(np.arange(m, dtype=np.intp), (n, 1))
    pins = []
    for t in range(len(b), 0, -1):
        i, s = b.letters[t - 1]
        c0, c1 = i - 1, i
        active = ((masks >> (t - 1)) & 1).astype(bool)
        red, black = (c0, c1) if s > 0 else (c1, c0)
        pins.append((active, labels[:, red].copy(), labels[:, black].copy()))
        swap = ~active
        left = labels[swap, c0].copy()
        labels[swap, c0] = labels[swap, c1]
        labels[swap, c1] = left
    comp = np.tile(np.arange(m, dtype=np.intp), (n, 1))
    orbit = comp.copy()
    for _ in range(m):
        orbit = np.take_along_axis(labels, orbit, axis=1)
        comp = np.minimum(comp, orbit)
    rows = np.arange(n)
    is_red = np.zeros((n, m), dtype=bool)
    is_black = np.zeros((n, m), dtype=bool)
    is_black[rows, comp[:, 0]] = True
    for active, red_lab, black_lab in pins:
        r = rows[active]
        is_red[r, comp[r, red_lab[active]]] = True
        is_black[r, comp[r, black_lab[active]]] = True
    ok = ~(is_red & is_black).any(axis=1)
    is_rep = comp == np.arange(m)
    free = (is_rep & ~is_red & ~is_black).sum(axis=1)
    return masks[ok], free[ok]


def _mask_to_monomial(mask: int) -> tuple[int, ...]:
    return tuple(t + 1 for t in range(mask.bit_length()) if mask >> t & 1)


def _sweep(b: BraidWord, limit: int, jobs: int | None = None) -> list[tuple[np.ndarray, np.ndarray]]:
    L = len(b)
    if L > limit:
        raise ResourceLimitError(
            f"braid length {L} exceeds the enumeration limit {limit}; raise it with --limit"
        )
    total = 1 << L
    bounds = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda r: _valid_masks(b, *r), bounds))
    return [_valid_masks(b, lo, hi) for lo, hi in bounds]


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BRAIDWALK_JOBS", "1")))
    except ValueError:
        return 1


def enumerate_simple_walks(
    b: BraidWord, limit: int = DEFAULT_LIMIT, jobs: int | None = None
) -> WalkCensus:
    """All nonempty simple walks with J in {2..m}, sorted by monomial."""
    walks = []
    for masks, _ in _sweep(b, limit, jobs):
        for mask in masks.tolist():
            mono = _mask_to_monomial(mask)
            coloring = color_from_monomial(b, mono)
            for k in range(len(coloring.free) + 1):
                for subset in itertools.combinations(coloring.free, k):
                    if not mono and not subset:
                        continue  # the empty walk
                    walks.append(trace_walk(b, mono, red_free=subset))
    walks.sort()
    return WalkCensus(b, tuple(walks))


def count_simple_walks(b: BraidWord, limit: int = DEFAULT_LIMIT, jobs: int | None = None) -> int:
    """|SW_b| without reconstructing the walks."""
    total = 0
    for _, free in _sweep(b, limit, jobs):
        total += int((np.int64(1) << free.astype(np.int64)).sum())
    return total - 1  # the empty walk


def valid_monomials(b: BraidWord, limit: int = DEFAULT_LIMIT) -> frozenset:
    """Monomials carrying at least one nonempty simple walk."""
    out = set()
    for masks, free in _sweep(b, limit, jobs=1):
        out.update(_mask_to_monomial(x) for x, f in zip(masks.tolist(), free.tolist()) if x or f)
    return frozenset(out)


def enumerate_semi_simple(b: BraidWord, limit: int = DEFAULT_LIMIT, jobs: int | None = None):
    """Censuses of ``b`` and of its reflection; together they form the semi-simple walks."""
    return (
        enumerate_simple_walks(b, limit, jobs),
        enumerate_simple_walks(reflect(b), limit, jobs),
    )


def semi_simple_monomials(b: BraidWord, limit: int = DEFAULT_LIMIT) -> frozenset:
    return valid_monomials(b, limit) | valid_monomials(reflect(b), limit)


# --- independent oracle: depth-first path search ----------------------------

# (sign, entering over/under) -> (letter, exit offset from i); jumps handled separately
_OVER = {1: 0, -1: 1}


def _paths_from(b: BraidWord, start: int) -> list[tuple[int, tuple, frozenset, frozenset]]:
    """Every bottom-to-top path from ``start``: (exit, letters, cells, jumps)."""
    L = len(b)
    out = []

    def go(t, col, letters, cells, jumps):
        if t == 0:
            out.append((col, tuple(letters), frozenset(cells), frozenset(jumps)))
            return
        i, s = b.letters[t - 1]
        if col not in (i, i + 1):
            cells.append((t - 1, col))
            go(t - 1, col, letters, cells, jumps)
            cells.pop()
            return
        over_col = i + _OVER[s]
        other = i + 1 if col == i else i
        if col == over_col:
            options = [("c", other, False), ("a", col, True)]
        else:
            options = [("b", other, False)]
        for x, nxt, jump in options:
            letters.append((t, x))
            cells.append((t - 1, nxt))
            if jump:
                jumps.append(t)
            go(t - 1, nxt, letters, cells, jumps)
            if jump:
                jumps.pop()
            cells.pop()
            letters.pop()

    go(L, start, [], [(L, start)], [])
    return out


def enumerate_paths_dfs(b: BraidWord, limit: int = DEFAULT_LIMIT) -> WalkCensus:
    """Simple walks by brute force over paths; must agree with :func:`enumerate_simple_walks`."""
    if len(b) > limit:
        raise ResourceLimitError(f"braid length {len(b)} exceeds the enumeration limit {limit}")
    m = b.width
    paths = {j: _paths_from(b, j) for j in range(2, m + 1)}
    walks = []
    for size in range(1, m):
        for J in itertools.combinations(range(2, m + 1), size):
            Jset = set(J)
            chosen = []

            def pick(k, used_cells, used_exits):
                if k == len(J):
                    walks.append(_assemble(J, chosen))
                    return
                for path in paths[J[k]]:
                    exit_col, _, cells, _ = path
                    if exit_col not in Jset or exit_col in used_exits:
                        continue
                    if cells & used_cells:
                        continue
                    chosen.append(path)
                    pick(k + 1, used_cells | cells, used_exits | {exit_col})
                    chosen.pop()

            pick(0, frozenset(), frozenset())
    walks.sort()
    return WalkCensus(b, tuple(walks))


def _assemble(J, chosen) -> SimpleWalk:
    words: dict[int, list[str]] = {}
    cells = set()
    jumps = set()
    for _, letters, path_cells, path_jumps in chosen:
        for t, x in letters:
            words.setdefault(t, []).append(x)
        cells |= path_cells
        jumps |= path_jumps
    return SimpleWalk(
        monomial=tuple(sorted(jumps)),
        J=tuple(J),
        pi=tuple(p[0] for p in chosen),
        local_words=tuple((t, tuple(words[t])) for t in sorted(words)),
        cells=frozenset(cells),
    )
