from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidwalk.errors import DomainError, ResourceLimitError
from braidwalk.torus import (
    FLOAT_CHECK_MAX,
    closed_form_f,
    closed_form_g,
    count_series,
    extend_by_recurrence,
    f_closed_float,
    g_closed_complex,
    series_braid,
    torus2_braid,
    torus3_braid,
    tribonacci,
)
from braidwalk.walks import count_simple_walks


def test_family_2():
    rep = count_series(2, 10)
    assert rep.counts == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert rep.recurrence_ok and rep.closedform_ok and not rep.mirror
    assert rep.rows()[0] == (1, 1)


def test_family_3_default_is_mirror():
    rep = count_series(3, 8)
    assert rep.counts == [0, 1, 4, 5, 10, 19, 34, 63]
    assert rep.recurrence_ok and rep.closedform_ok and rep.mirror


def test_family_3_literal():
    rep = count_series(3, 7, mirror=False)
    assert rep.counts == [2, 5, 10, 17, 32, 59, 108]
    assert rep.recurrence_ok and not rep.closedform_ok


def test_words():
    assert torus2_braid(3).to_ints() == [-1, -1, -1]
    assert torus3_braid(2).to_ints() == [-1, -2, -1, -2]
    assert series_braid(3, 2).to_ints() == [1, 2, 1, 2]
    with pytest.raises(DomainError):
        torus2_braid(0)
    with pytest.raises(DomainError):
        count_series(4, 3)


def test_tribonacci():
    assert [tribonacci(n) for n in range(-1, 9)] == [0, 0, 1, 1, 2, 4, 7, 13, 24, 44]


@pytest.mark.parametrize("n", range(1, FLOAT_CHECK_MAX + 1))
def test_closed_forms_agree(n):
    assert abs(f_closed_float(n) - closed_form_f(n)) < 1e-6
    assert abs(g_closed_complex(n) - closed_form_g(n)) < 1e-6
    assert closed_form_g(n) == tribonacci(n - 1) + 3 * tribonacci(n - 2)


def test_printed_g_index_is_shifted():
    for n in range(1, 12):
        assert abs(g_closed_complex(n, "verbatim") - closed_form_g(n + 1)) < 1e-6


def test_large_n_uses_exact_values():
    assert closed_form_f(200) == closed_form_f(199) + closed_form_f(198)
    assert closed_form_g(200) == closed_form_g(199) + closed_form_g(198) + closed_form_g(197)


@given(st.integers(3, 12))
def test_recurrence_extension(n_max):
    seeds = count_series(2, 3).counts
    assert extend_by_recurrence(seeds, 2, n_max) == [closed_form_f(n) for n in range(1, n_max + 1)]


def test_limit_keeps_partial_counts():
    with pytest.raises(ResourceLimitError) as info:
        count_series(2, 12, limit=10)
    # the limit caps the word length, so n = 11 is the first to stop
    assert info.value.partial.counts == [closed_form_f(n) for n in range(1, 11)]


def test_counts_match_direct_enumeration():
    for n in range(1, 6):
        assert count_simple_walks(series_braid(2, n)) == closed_form_f(n)
        assert count_simple_walks(series_braid(3, n)) == closed_form_g(n)
