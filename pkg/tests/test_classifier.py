import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cricket_pitch.algebra import enumerate_boards
from cricket_pitch.classifier import (
    MStat,
    SideClass,
    _VECTOR_MIN,
    classify,
    m_stat,
    reduce_board,
    side_class,
    strip_odd_tail,
    winning_moves,
)
from cricket_pitch.core import LEFT, RIGHT, Board, Move, Position, parse_board
from cricket_pitch.oracle import best_moves_oracle, misere_outcome

from .reference import m_stat_by_definition
from .strategies import boards

SMALL = enumerate_boards(9, max_bumps=5)


def left_of(text):
    return parse_board(text + "|").left


class TestSideClass:
    @pytest.mark.parametrize("side,expected", [
        ((3, 5, 1), SideClass.ALL_ODD),
        ((1, 2), SideClass.HAS_EVEN),
        ((), SideClass.EMPTY),
    ])
    def test_examples(self, side, expected):
        assert side_class(side) is expected


class TestStripOddTail:
    def test_worked_example(self):
        assert strip_odd_tail(left_of("1,1,6,2,4,5")) == left_of("6,2,4,5")
        assert strip_odd_tail((5, 4, 2, 6, 1, 1)) == (5, 4, 2, 6)

    def test_already_even(self):
        assert strip_odd_tail((3, 4)) == (3, 4)

    def test_all_odd_guard(self):
        assert strip_odd_tail((1, 3, 5)) == (1, 3, 5)

    @given(st.lists(st.integers(1, 9), max_size=8).map(tuple))
    def test_preserves_side_class(self, side):
        assert side_class(strip_odd_tail(side)) is side_class(side)


class TestMStat:
    def test_worked_left(self):
        assert m_stat(left_of("1,2,1,5,3")) == MStat(5, 1)

    def test_worked_right(self):
        assert m_stat((5, 3, 2, 3)) == MStat(2, 3)

    def test_worked_none(self):
        assert not m_stat((2, 3)).finite
        assert m_stat((2, 3)).value == math.inf

    def test_second_worked_example(self):
        # 2,3,1,2|2,3: m(alpha)=2, M(alpha)=1
        assert m_stat(left_of("2,3,1,2")) == MStat(2, 1)

    def test_no_odd(self):
        assert not m_stat((2, 4, 6)).finite

    @given(st.lists(st.integers(1, 9), max_size=10).map(tuple))
    def test_matches_definition(self, side):
        ref = m_stat_by_definition(side)
        got = m_stat(side)
        assert (None if not got.finite else (got.index, got.value)) == ref

    @given(st.lists(st.integers(1, 9), min_size=_VECTOR_MIN, max_size=3 * _VECTOR_MIN),
           st.sampled_from([0, 300, 2**70]))
    def test_vector_path_matches_scalar(self, side, offset):
        side = tuple(x + offset for x in side)
        ref = m_stat_by_definition(side)
        got = m_stat(side)
        assert (None if not got.finite else (got.index, got.value)) == ref
        scalar_evens = [i for i, x in enumerate(side) if x % 2 == 0]
        expected = side[: scalar_evens[-1] + 1] if scalar_evens else side
        assert strip_odd_tail(side) == expected
        assert side_class(side) is (SideClass.HAS_EVEN if scalar_evens else SideClass.ALL_ODD)


class TestClassify:
    @pytest.mark.parametrize("text,expected", [
        ("6,2,4,5|4,3,3,4,6", "R"),
        ("6,4,2,1|2,3,5,7,8", "L"),
        ("1|1", "P"),
        ("|", "N"),
        ("2|2", "P"),
        ("1,2,1,5,3|5,3,2,3", "L"),
        ("1,1,6,2,4,5|4,3,3,4,6", "R"),
    ])
    def test_examples(self, text, expected):
        assert classify(parse_board(text))[0].name == expected

    def test_intro_variant_is_next_player_win(self):
        # the intro prints the second puzzle with b_1 = 1 instead of 2
        b = parse_board("6,4,2,1|1,3,5,7,8")
        assert classify(b)[0].name == "N"
        assert misere_outcome(Position((b,))).name == "N"

    def test_trace_of_unreduced_board(self):
        _, trace = classify(parse_board("1,1,6,2,4,5|4,3,3,4,6"))
        assert [str(s) for s in trace] == [
            "StrippedOddTail(left, 2)",
            "Theorem2Case(2, (m=1, M=5), (m=3, M=3))",
        ]

    @pytest.mark.parametrize("text,rule", [
        ("|", "EmptyBoth"),
        ("3,1|", "OneSideOnly"),
        ("1|1", "Theorem1Case"),
        ("1|2", "Theorem1Case"),
        ("2|2", "Theorem2Case"),
    ])
    def test_trace_rules(self, text, rule):
        assert classify(parse_board(text))[1][-1].rule == rule

    @pytest.mark.parametrize("b", SMALL, ids=str)
    def test_agrees_with_oracle(self, b):
        assert classify(b)[0] == misere_outcome(Position((b,)))

    @given(boards)
    def test_mirror_duality(self, b):
        assert classify(b.mirror())[0] == classify(b)[0].conjugate()

    @given(boards)
    def test_stripping_keeps_classification(self, b):
        assert classify(reduce_board(b))[0] == classify(b)[0]
        assert classify(Board(strip_odd_tail(b.left), b.right))[0] == classify(b)[0]


class TestWinningMoves:
    def test_right_moves_past_b3(self):
        b = parse_board("6,2,4,5|4,3,3,4,6")
        found = winning_moves(b, RIGHT)
        assert Move(0, RIGHT, 3) in found

    def test_left_moves_past_a2(self):
        assert Move(0, LEFT, 2) in winning_moves(parse_board("6,4,2,1|2,3,5,7,8"), LEFT)

    def test_no_left_moves(self):
        assert winning_moves(parse_board("|5"), LEFT) == []

    def test_two_left(self):
        assert winning_moves(parse_board("2|"), LEFT) == [Move(0, LEFT, 1)]

    @pytest.mark.parametrize("b", [b for b in SMALL if b.mass <= 7], ids=str)
    def test_matches_oracle(self, b):
        pos = Position((b,))
        o = classify(b)[0]
        for p in (LEFT, RIGHT):
            found = winning_moves(b, p)
            assert found == best_moves_oracle(pos, p)
            assert bool(found) == (bool(b.side(p)) and o.winner(p) is p)
            if o.name == "P":
                assert found == []
