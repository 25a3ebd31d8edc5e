from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidwalk.braid import BraidWord, free_reduce, is_knot

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.filter_too_much]
)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_width=2, max_width=4, min_len=0, max_len=8):
    m = draw(st.integers(min_width, max_width))
    letters = st.integers(1, m - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    entries = draw(st.lists(letters, min_size=min_len, max_size=max_len))
    return BraidWord.from_ints(entries, m)


@st.composite
def knot_words(draw, min_width=2, max_width=4, max_len=8):
    """Knot-closing words built by appending a connecting cycle to random letters."""
    b = draw(braid_words(min_width, max_width, 0, max(0, max_len - max_width + 1)))
    m = b.width
    tail = [draw(st.sampled_from([i, -i])) for i in range(1, m)]
    word = BraidWord.from_ints(b.to_ints() + tail, m)
    if not is_knot(word):
        # permuting columns with the tail may close up into a link; fall back to the bare cycle
        word = BraidWord.from_ints(tail, m)
    return word


def random_knot_word(rng: random.Random, max_width=4, max_len=12, reduced=True) -> BraidWord:
    """Rejection-sample a knot word; used by the larger fuzz sweeps."""
    while True:
        m = rng.randint(2, max_width)
        L = rng.randint(m - 1, max_len)
        entries = [rng.choice([1, -1]) * rng.randint(1, m - 1) for _ in range(L)]
        b = BraidWord.from_ints(entries, m)
        if reduced:
            b = free_reduce(b)
        if len(b) and is_knot(b):
            return b


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES: list[tuple[int, str]] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
