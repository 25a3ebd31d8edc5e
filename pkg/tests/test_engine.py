from __future__ import annotations

import pytest
from hypothesis import given, settings

from braidwalk.braid import BraidWord, cyclic_shift, parse_braid, reflect, stabilize
from braidwalk.bracket import jones_via_bracket
from braidwalk.engine import (
    INVERT_Q,
    NormalForm,
    calibrate_convention,
    colored_jones,
    colored_jones_raw,
    eval_crossing,
    eval_stack,
    framing_doubled,
    kashaev_evaluation,
    normal_order,
    stack_sum,
)
from braidwalk.errors import DomainError, ResourceLimitError
from braidwalk.laurent import ONE, ZERO, LaurentPoly
from braidwalk.walks import enumerate_simple_walks

from conftest import knot_words

TREFOIL = BraidWord.from_ints([1, 1, 1])
FIGURE_EIGHT = parse_braid("[1,-2,1,-2]")


def qp(e2: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, e2)


def poch(a: int, k: int) -> LaurentPoly:
    """(q^a; q)_k"""
    p = ONE
    for i in range(k):
        p = p * (ONE - qp(2 * (a + i)))
    return p


def figure_eight_cyclotomic(N: int) -> LaurentPoly:
    total = ZERO
    for k in range(N):
        p = ONE
        for j in range(1, k + 1):
            p = p * (qp(N + j) - qp(-N - j)) * (qp(N - j) - qp(j - N))
        total = total + p
    return total


def trefoil_cyclotomic(N: int) -> LaurentPoly:
    total = ZERO
    for k in range(N):
        total = total + qp(2 * k) * poch(1 - N, k) * poch(1 + N, k)
    return total


@pytest.mark.parametrize(
    "word,sign,expected",
    [
        ("cb", 1, NormalForm(1, 1, 0, -2)),
        ("ac", 1, NormalForm(0, 1, 1, 1)),
        ("ab", 1, NormalForm(1, 0, 1, 0)),
        ("ab", -1, NormalForm(1, 0, 1, 2)),
        ("ac", -1, NormalForm(0, 1, 1, -1)),
        ("cb", -1, NormalForm(1, 1, 0, 2)),
        ("acb", 1, NormalForm(1, 1, 1, -1)),
        ("bca", 1, NormalForm(1, 1, 1, 0)),
    ],
)
def test_normal_order(word, sign, expected):
    assert normal_order(word, sign) == expected


def test_eval_crossing_examples():
    # positive: b^s c^r a^d -> q^(r(N-1-d)) prod_i (1 - q^(N-1-r-i))
    assert eval_crossing(NormalForm(0, 0, 0, 0), 1, 3) == ONE
    assert eval_crossing(NormalForm(0, 1, 0, 0), 1, 3) == qp(4)
    assert eval_crossing(NormalForm(0, 0, 1, 0), 1, 3) == ONE - qp(4)
    assert eval_crossing(NormalForm(0, 1, 1, 0), 1, 3) == qp(2) * (ONE - qp(2))
    # negative: q^(-r(N-1)) prod_i (1 - q^(r+i+1-N))
    assert eval_crossing(NormalForm(0, 1, 0, 0), -1, 3) == qp(-4)
    assert eval_crossing(NormalForm(0, 0, 1, 0), -1, 2) == ONE - qp(-2)
    # the q-shift from ordering is carried along
    assert eval_crossing(NormalForm(1, 1, 0, -2), 1, 2) == qp(-2)


def test_n_copies_of_a_jump_vanish():
    for N in range(2, 6):
        assert eval_crossing(NormalForm(0, 0, N, 0), 1, N).is_zero()
        assert eval_crossing(NormalForm(0, 0, N, 0), -1, N).is_zero()


def test_single_stacks_are_the_walk_weights_at_n2():
    census = enumerate_simple_walks(parse_braid("[-2,1,2,2,2,1]"))
    total = ONE
    for w in census.walks:
        total = total + eval_stack(parse_braid("[-2,1,2,2,2,1]"), [w], 2)
    assert total == stack_sum(parse_braid("[-2,1,2,2,2,1]"), 2, census=census).value


def test_unknot_is_one():
    for N in range(2, 5):
        assert colored_jones(BraidWord(1, ()), N) == ONE
        assert colored_jones(BraidWord.from_ints([1]), N) == ONE
        assert colored_jones(BraidWord.from_ints([1, -2]), N) == ONE


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_figure_eight(N):
    assert colored_jones(FIGURE_EIGHT, N) == figure_eight_cyclotomic(N)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_trefoil(N):
    assert colored_jones(TREFOIL, N) == trefoil_cyclotomic(N)
    assert colored_jones(reflect(TREFOIL), N) == trefoil_cyclotomic(N).invert_q()


def test_frozen_values():
    assert str(colored_jones(TREFOIL, 2)) == "q + q^3 - q^4"
    assert str(colored_jones(TREFOIL, 3)) == "q^2 + q^5 - q^7 + q^8 - q^9 - q^10 + q^11"
    assert str(colored_jones(parse_braid("[-2,1,2,2,2,1]"), 2)) == "q - q^2 + 2q^3 - q^4 + q^5 - q^6"


def test_convention_calibration():
    assert calibrate_convention() is False
    assert INVERT_Q is False


def test_framing():
    assert framing_doubled(TREFOIL, 2) == 2
    assert framing_doubled(FIGURE_EIGHT, 3) == -4


def test_non_knot_is_domain_error():
    with pytest.raises(DomainError):
        colored_jones(BraidWord.from_ints([1, 1]), 2)


def test_limits():
    with pytest.raises(ValueError):
        colored_jones(TREFOIL, 1)
    with pytest.raises(ResourceLimitError):
        colored_jones(TREFOIL, 13)
    with pytest.raises(ResourceLimitError) as info:
        colored_jones(FIGURE_EIGHT, 4, max_work=10)
    assert info.value.visited > 10


def test_kashaev():
    value, _ = kashaev_evaluation(BraidWord(1, ()), 3)
    assert abs(value - 1) < 1e-12
    value, growth = kashaev_evaluation(FIGURE_EIGHT, 2)
    assert abs(value - 5) < 1e-9 and growth > 0


@settings(max_examples=25)
@given(knot_words(max_len=7))
def test_matches_bracket_oracle(b):
    assert colored_jones(b, 2) == jones_via_bracket(b)


@settings(max_examples=15)
@given(knot_words(max_width=3, max_len=6))
def test_markov_invariance_n3(b):
    v = colored_jones(b, 3)
    assert colored_jones(cyclic_shift(b, 1), 3) == v
    assert colored_jones(stabilize(b, 1), 3) == v
    assert colored_jones(stabilize(b, -1), 3) == v
    assert colored_jones(reflect(b), 3) == v.invert_q()
    assert v.at_one() == 1


@settings(max_examples=15)
@given(knot_words(max_width=3, max_len=6))
def test_truncation_is_sound(b):
    for N in (2, 3):
        pruned = stack_sum(b, N)
        bare = stack_sum(b, N, prune=False)
        deeper = stack_sum(b, N, depth_limit=(N - 1) * (b.width - 1) + 2)
        assert pruned.value == bare.value == deeper.value
        assert pruned.max_depth <= (N - 1) * (b.width - 1)


def test_mixed_grid_guard_passes_on_knots():
    assert colored_jones_raw(FIGURE_EIGHT, 3).on_integer_grid()
