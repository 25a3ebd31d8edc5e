"""Braid words: parsing, derived quantities, Markov moves and symmetries.

A braid word on ``width`` strands is a sequence of signed generators.  Letter
``(i, +1)`` is sigma_i, where the strand in column i+1 crosses over the strand
in column i; ``(i, -1)`` is its inverse.  Crossings are numbered 1..length from
top to bottom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class BraidParseError(ValueError):
    """Raised for malformed braid text; ``position`` is 0-based."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class BraidLetter(NamedTuple):
    index: int
    sign: int

    def to_int(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    width: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"braid width must be >= 1, got {self.width}")
        letters = tuple(BraidLetter(int(i), int(s)) for i, s in self.letters)
        for pos, (index, sign) in enumerate(letters):
            if sign not in (1, -1):
                raise ValueError(f"letter {pos}: sign must be +1 or -1, got {sign}")
            if not 1 <= index <= self.width - 1:
                raise ValueError(
                    f"letter {pos}: generator {index} out of range for width {self.width}"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, entries: Iterable[int], width: int | None = None) -> BraidWord:
        entries = [int(e) for e in entries]
        if any(e == 0 for e in entries):
            raise ValueError("zero is not a braid generator")
        if width is None:
            width = 1 + max((abs(e) for e in entries), default=0)
        return cls(width, tuple(BraidLetter(abs(e), 1 if e > 0 else -1) for e in entries))

    def to_ints(self) -> list[int]:
        return [letter.to_int() for letter in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def length(self) -> int:
        return len(self.letters)

    def writhe(self) -> int:
        return sum(letter.sign for letter in self.letters)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.to_ints()) + "]"

    def __repr__(self) -> str:
        return f"BraidWord(width={self.width}, word={self})"


_TOKEN = re.compile(r"^[+-]?\d+$")


def parse_braid(text: str, width: int | None = None) -> BraidWord:
    """Parse ``"[e1,e2,...]"`` (brackets optional, whitespace ignored)."""
    body = "".join(text.split())
    if body.startswith("["):
        if not body.endswith("]"):
            raise BraidParseError("unbalanced bracket", None)
        body = body[1:-1]
    elif body.endswith("]"):
        raise BraidParseError("unbalanced bracket", None)
    if body == "":
        return BraidWord(width if width is not None else 1, ())
    entries = []
    for pos, token in enumerate(body.split(",")):
        if not _TOKEN.match(token):
            raise BraidParseError(f"malformed token {token!r} at position {pos}", pos)
        value = int(token)
        if value == 0:
            raise BraidParseError(f"zero generator at position {pos}", pos)
        if width is not None and abs(value) >= width:
            raise BraidParseError(
                f"generator {value} at position {pos} does not fit width {width}", pos
            )
        entries.append(value)
    return BraidWord.from_ints(entries, width)


def parse_compact(text: str, width: int | None = None) -> BraidWord:
    """Parse the compact table notation, e.g. ``"12^3 12^{-1}"`` or ``"(12^{-1})^2"``.

    Each digit is a generator; ``^k`` repeats the preceding digit or group and a
    negative power inverts it.
    """
    src = "".join(text.split())
    pos = 0

    def exponent() -> int:
        nonlocal pos
        if pos < len(src) and src[pos] == "^":
            # braced exponents may have several digits; bare ones are one digit
            m = re.match(r"\^(?:\{([+-]?\d+)\}|([+-]?\d))", src[pos:])
            if m is None:
                raise BraidParseError(f"bad exponent at offset {pos}", pos)
            pos += m.end()
            return int(m.group(1) or m.group(2))
        return 1

    def power(word: list[int], k: int) -> list[int]:
        if k < 0:
            word = [-e for e in reversed(word)]
            k = -k
        return word * k

    def sequence() -> list[int]:
        nonlocal pos
        out: list[int] = []
        while pos < len(src) and src[pos] != ")":
            ch = src[pos]
            if ch == "(":
                pos += 1
                inner = sequence()
                if pos >= len(src) or src[pos] != ")":
                    raise BraidParseError("unbalanced parenthesis", pos)
                pos += 1
                out += power(inner, exponent())
            elif ch.isdigit():
                pos += 1
                out += power([int(ch)], exponent())
            else:
                raise BraidParseError(f"unexpected {ch!r} at offset {pos}", pos)
        return out

    entries = sequence()
    if pos != len(src):
        raise BraidParseError("unbalanced parenthesis", pos)
    return BraidWord.from_ints(entries, width)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Strand correspondence of ``b``: entry ``j-1`` is the top column reached
    by the strand leaving bottom column ``j``."""
    # cols[c] = bottom column of the strand currently in column c+1
    cols = list(range(1, b.width + 1))
    for index, _ in reversed(b.letters):
        cols[index - 1], cols[index] = cols[index], cols[index - 1]
    perm = [0] * b.width
    for top, bottom in enumerate(cols, start=1):
        perm[bottom - 1] = top
    return tuple(perm)


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        cyc = []
        p = start
        while p not in seen:
            seen.add(p)
            cyc.append(p)
            p = perm[p - 1]
        out.append(tuple(cyc))
    return out


def closure_components(b: BraidWord) -> int:
    return len(cycles(permutation(b)))


def is_knot(b: BraidWord) -> bool:
    return closure_components(b) == 1


def reflect(b: BraidWord) -> BraidWord:
    return BraidWord(b.width, tuple(BraidLetter(i, -s) for i, s in b.letters))


def rotate(b: BraidWord) -> BraidWord:
    """180 degree rotation in the plane: order reversed, index i -> width - i."""
    return BraidWord(b.width, tuple(BraidLetter(b.width - i, s) for i, s in reversed(b.letters)))


def reverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.width, tuple(reversed(b.letters)))


def cyclic_shift(b: BraidWord, k: int = 1) -> BraidWord:
    if not b.letters:
        return b
    k %= len(b.letters)
    return BraidWord(b.width, b.letters[k:] + b.letters[:k])


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return BraidWord(b.width + 1, b.letters + (BraidLetter(b.width, sign),))


def free_reduce(b: BraidWord) -> BraidWord:
    stack: list[BraidLetter] = []
    for letter in b.letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(b.width, tuple(stack))


def is_reduced(b: BraidWord) -> bool:
    return len(free_reduce(b)) == len(b)


def insert_pair(b: BraidWord, pos: int, index: int, sign: int = 1) -> BraidWord:
    """Insert sigma_index^sign sigma_index^-sign before letter ``pos``."""
    pair = (BraidLetter(index, sign), BraidLetter(index, -sign))
    return BraidWord(b.width, b.letters[:pos] + pair + b.letters[pos:])


def conjugate(b: BraidWord, index: int, sign: int = 1) -> BraidWord:
    """sigma^sign * b * sigma^-sign, freely reduced."""
    word = (BraidLetter(index, sign),) + b.letters + (BraidLetter(index, -sign),)
    return free_reduce(BraidWord(b.width, word))


def yang_baxter_sites(b: BraidWord) -> list[int]:
    """Positions p where letters p..p+2 read s_i s_j s_i with |i-j| = 1, all one sign."""
    sites = []
    L = b.letters
    for p in range(len(L) - 2):
        x, y, z = L[p], L[p + 1], L[p + 2]
        if x == z and abs(x.index - y.index) == 1 and x.sign == y.sign:
            sites.append(p)
    return sites


def yang_baxter(b: BraidWord, pos: int) -> BraidWord:
    """Rewrite s_i s_j s_i at ``pos`` as s_j s_i s_j."""
    if pos not in yang_baxter_sites(b):
        raise ValueError(f"no Yang-Baxter pattern at position {pos}")
    x, y, _ = b.letters[pos : pos + 3]
    return BraidWord(b.width, b.letters[:pos] + (y, x, y) + b.letters[pos + 3 :])


def far_commute_sites(b: BraidWord) -> list[int]:
    L = b.letters
    return [p for p in range(len(L) - 1) if abs(L[p].index - L[p + 1].index) > 1]


def far_commute(b: BraidWord, pos: int) -> BraidWord:
    if pos not in far_commute_sites(b):
        raise ValueError(f"letters at {pos}, {pos + 1} do not commute")
    L = list(b.letters)
    L[pos], L[pos + 1] = L[pos + 1], L[pos]
    return BraidWord(b.width, tuple(L))


UNKNOT = BraidWord(1, ())
