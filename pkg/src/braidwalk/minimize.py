"""Search the symmetry orbit of a braid word for the fewest simple walks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .braid import BraidWord, cyclic_shift, reflect, reverse, rotate
from .errors import ResourceLimitError
from .walks import DEFAULT_LIMIT, count_simple_walks, default_jobs


@dataclass(frozen=True)
class OrbitEntry:
    word: BraidWord
    transform: tuple[str, ...]
    sw_count: int | None
    mirror_flag: bool
    error: str | None = field(default=None, compare=False)

    @property
    def failed(self) -> bool:
        return self.sw_count is None

    def describe(self) -> str:
        return " ".join(self.transform) if self.transform else "identity"


def _orbit_words(b: BraidWord) -> list[tuple[tuple[str, ...], BraidWord]]:
    out = []
    for use_reflect in (False, True):
        x = reflect(b) if use_reflect else b
        for use_rotate in (False, True):
            y = rotate(x) if use_rotate else x
            for use_reverse in (False, True):
                z = reverse(y) if use_reverse else y
                base = tuple(
                    name
                    for name, used in (
                        ("reflect", use_reflect),
                        ("rotate", use_rotate),
                        ("reverse", use_reverse),
                    )
                    if used
                )
                for k in range(max(len(z), 1)):
                    steps = base + ((f"shift {k}",) if k else ())
                    out.append((steps, cyclic_shift(z, k)))
    return out


def _sort_key(entry: OrbitEntry):
    return (len(entry.transform), entry.word.to_ints())


def symmetry_orbit(b: BraidWord, limit: int = DEFAULT_LIMIT, jobs: int | None = None) -> list[OrbitEntry]:
    """All words reachable by reflect/rotate/reverse and cyclic shifts, deduplicated.

    When two transforms give the same literal word the shorter description is kept.
    """
    if len(b) < 1:
        raise ValueError("orbit needs a word with at least one letter")
    candidates = sorted(_orbit_words(b), key=lambda t: (len(t[0]), t[0]))
    unique: dict[tuple[int, ...], tuple[tuple[str, ...], BraidWord]] = {}
    for steps, word in candidates:
        unique.setdefault(tuple(word.to_ints()), (steps, word))

    def evaluate(item):
        steps, word = item
        mirror = "reflect" in steps
        try:
            return OrbitEntry(word, steps, count_simple_walks(word, limit=limit, jobs=1), mirror)
        except ResourceLimitError as exc:
            return OrbitEntry(word, steps, None, mirror, str(exc))

    items = list(unique.values())
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            entries = list(pool.map(evaluate, items))
    else:
        entries = [evaluate(it) for it in items]
    return entries


def minimize_walks(b: BraidWord, limit: int = DEFAULT_LIMIT, jobs: int | None = None) -> OrbitEntry:
    """Orbit entry with the fewest simple walks; ties go to the shorter transform, then the smaller word."""
    entries = [e for e in symmetry_orbit(b, limit, jobs) if not e.failed]
    if not entries:
        raise ResourceLimitError(f"every orbit entry of {b} exceeded the enumeration limit")
    return min(entries, key=lambda e: (e.sw_count, *_sort_key(e)))


@dataclass(frozen=True)
class LeadingResult:
    word: BraidWord
    found: bool
    transform: tuple[str, ...] = ()


def normalize_leading(b: BraidWord) -> LeadingResult:
    """Rewrite ``b`` to start with sigma_1 without changing its simple walks.

    Moving a leading letter of index != 1 to the end keeps the walk count, as
    does reversal.  Tries ``b`` then ``reverse(b)``.
    """
    if b.letters and b.letters[0] == (1, 1):
        return LeadingResult(b, True)
    for use_reverse in (False, True):
        word = reverse(b) if use_reverse else b
        for k in range(len(word)):
            first = word.letters[0]
            if first == (1, 1):
                steps = (("reverse",) if use_reverse else ()) + ((f"shift {k}",) if k else ())
                return LeadingResult(word, True, steps)
            if first.index == 1:
                break
            word = cyclic_shift(word, 1)
    return LeadingResult(b, False)


def conservation_profile(b: BraidWord, limit: int = DEFAULT_LIMIT) -> list[tuple[int, int]]:
    """(|SW|, |SW*|) for each cyclic shift of ``b``; their sums are all equal."""
    out = []
    for k in range(max(len(b), 1)):
        w = cyclic_shift(b, k)
        out.append((count_simple_walks(w, limit, jobs=1), count_simple_walks(reflect(w), limit, jobs=1)))
    return out
