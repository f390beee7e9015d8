import pytest
from hypothesis import given

from cricket_pitch.core import LEFT, RIGHT, ZERO, Move, Position, has_move, mirror, parse_position
from cricket_pitch.oracle import (
    L_WIN,
    N_WIN,
    P_WIN,
    R_WIN,
    BudgetExceeded,
    MisereSolver,
    Outcome,
    SearchBudget,
    best_moves_oracle,
    canonical_key,
    misere_outcome,
)

from .reference import outcome_name
from .strategies import positions


@pytest.mark.parametrize("text,expected", [
    ("|", "N"),
    ("1|", "R"),
    ("|1", "L"),
    ("2|2", "P"),
    ("|1 + 1|", "N"),
    ("0", "N"),
    # intro: Left moving first wins the first sum and loses the second
    ("2,1|1,2 + 2|2,1", "N"),
    ("4,3|3,4 + 2|2,1", "R"),
])
def test_known_outcomes(text, expected):
    assert misere_outcome(parse_position(text)).name == expected


@given(positions)
def test_matches_plain_recursion(pos):
    assert misere_outcome(pos).name == outcome_name(pos)


@given(positions)
def test_misere_base_case(pos):
    o = misere_outcome(pos)
    for p in (LEFT, RIGHT):
        if not has_move(pos, p):
            assert o.winner(p) is p


@given(positions)
def test_conjugation(pos):
    assert misere_outcome(mirror(pos)) == misere_outcome(pos).conjugate()


@given(positions)
def test_adding_empty_sum(pos):
    assert misere_outcome(pos + ZERO) == misere_outcome(pos)


@given(positions)
def test_empty_boards_can_be_dropped(pos):
    stripped = Position(b for b in pos if b.bumps)
    assert misere_outcome(pos) == misere_outcome(stripped)


class TestBestMoves:
    def test_two_left(self):
        assert best_moves_oracle(parse_position("2|"), LEFT) == [Move(0, LEFT, 1)]

    def test_no_move(self):
        assert best_moves_oracle(parse_position("|1"), LEFT) == []

    def test_p_position(self):
        assert best_moves_oracle(parse_position("1|1"), LEFT) == []
        assert best_moves_oracle(parse_position("1|1"), RIGHT) == []

    @given(positions)
    def test_nonempty_iff_mover_wins_with_a_move(self, pos):
        for p in (LEFT, RIGHT):
            found = best_moves_oracle(pos, p)
            assert bool(found) == (has_move(pos, p) and misere_outcome(pos).winner(p) is p)


class TestCanonicalKey:
    def test_order_independent(self):
        assert canonical_key(parse_position("1| + |2")) == canonical_key(parse_position("|2 + 1|"))

    def test_empty_board_vs_empty_sum(self):
        assert canonical_key(parse_position("|")) != canonical_key(parse_position("0"))
        assert misere_outcome(parse_position("|")) == misere_outcome(parse_position("0"))

    def test_reflexive(self):
        assert canonical_key(parse_position("2|2")) == canonical_key(parse_position("2|2"))


class TestBudget:
    def test_state_budget(self):
        with pytest.raises(BudgetExceeded) as err:
            MisereSolver().outcome(parse_position("3,3,3|3,3,3"), SearchBudget(max_states=5))
        assert err.value.states > 5

    def test_mass_budget(self):
        with pytest.raises(BudgetExceeded):
            MisereSolver().outcome(parse_position("9,9|9"), SearchBudget(max_total_mass=20))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SearchBudget(max_states=0)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("CPITCH_MAX_STATES", "123")
        assert SearchBudget.from_env().max_states == 123
        assert SearchBudget.from_env(7).max_states == 7

    def test_fresh_and_shared_tables_agree(self):
        pos = parse_position("2,1|1,2 + 3|1")
        assert MisereSolver().outcome(pos) == misere_outcome(pos)


class TestOutcomeOrder:
    def test_classes(self):
        assert Outcome(LEFT, LEFT) == L_WIN and Outcome(RIGHT, RIGHT) == R_WIN
        assert Outcome(LEFT, RIGHT) == N_WIN and Outcome(RIGHT, LEFT) == P_WIN

    def test_lattice(self):
        for o in (L_WIN, N_WIN, P_WIN, R_WIN):
            assert R_WIN <= o <= L_WIN
        assert not N_WIN <= P_WIN and not P_WIN <= N_WIN
        assert R_WIN < N_WIN < L_WIN

    def test_conjugate(self):
        assert [o.conjugate().name for o in (L_WIN, N_WIN, P_WIN, R_WIN)] == ["R", "N", "P", "L"]
