"""Exhaustive misère search over disjunctive sums of Cricket Pitch boards.

The player to move with no legal move anywhere in the sum wins.  Results
are memoized on (sorted component tuple, player to move), and the table
is shared between calls through a :class:`MisereSolver` instance.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field

from .core import LEFT, RIGHT, Board, Move, Player, Position, as_position, board_successors

_CLASS_OF = {
    (LEFT, LEFT): "L",
    (LEFT, RIGHT): "N",
    (RIGHT, LEFT): "P",
    (RIGHT, RIGHT): "R",
}
_PAIR_OF = {v: k for k, v in _CLASS_OF.items()}


@dataclass(frozen=True)
class Outcome:
    """Winner with Left moving first and winner with Right moving first."""

    left_starts: Player
    right_starts: Player

    @classmethod
    def of(cls, name: str) -> "Outcome":
        return cls(*_PAIR_OF[name.upper()])

    @property
    def name(self) -> str:
        return _CLASS_OF[self.left_starts, self.right_starts]

    def winner(self, first: Player) -> Player:
        return self.left_starts if first is LEFT else self.right_starts

    def conjugate(self) -> "Outcome":
        return Outcome(self.right_starts.opponent, self.left_starts.opponent)

    # Coordinatewise order with Left > Right: L is top, R bottom, N and P incomparable.
    def __le__(self, other: "Outcome") -> bool:
        rank = {RIGHT: 0, LEFT: 1}
        return (rank[self.left_starts] <= rank[other.left_starts]
                and rank[self.right_starts] <= rank[other.right_starts])

    def __ge__(self, other: "Outcome") -> bool:
        return other <= self

    def __lt__(self, other: "Outcome") -> bool:
        return self <= other and self != other

    def __gt__(self, other: "Outcome") -> bool:
        return other < self

    def __str__(self) -> str:
        return self.name


L_WIN, R_WIN, N_WIN, P_WIN = (Outcome.of(c) for c in "LRNP")

DEFAULT_MAX_STATES = 10**7
DEFAULT_MAX_MASS = 64


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = DEFAULT_MAX_STATES
    max_total_mass: int = DEFAULT_MAX_MASS

    def __post_init__(self):
        if self.max_states <= 0 or self.max_total_mass <= 0:
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls, max_states: int | None = None) -> "SearchBudget":
        """Budget honoring ``CPITCH_MAX_STATES`` unless overridden explicitly."""
        if max_states is None:
            env = os.environ.get("CPITCH_MAX_STATES")
            max_states = int(env) if env else DEFAULT_MAX_STATES
        return cls(max_states=max_states)


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, states: int):
        super().__init__(f"{message} (states explored: {states})")
        self.states = states


def canonical_key(position: Position) -> tuple:
    """Order-independent key; ``Position`` already stores sorted components."""
    return as_position(position).components


def _successor_keys(key: tuple, player: Player) -> list[tuple]:
    out = []
    for i, board in enumerate(key):
        if i and board == key[i - 1]:
            continue  # identical component, same successors
        rest = key[:i] + key[i + 1:]
        for succ in board_successors(board, player):
            out.append(tuple(sorted(rest + (succ,))))
    return out


@dataclass
class MisereSolver:
    """Memoized misère minimax.  Not thread-safe; use one instance per thread."""

    table: dict = field(default_factory=dict)
    last_states: int = 0

    def _solve(self, key: tuple, budget: SearchBudget) -> None:
        table = self.table
        start = len(table)
        limit = budget.max_states

        def wins(k: tuple, mover: Player) -> bool:
            memo = table.get((k, mover))
            if memo is not None:
                return memo
            opp = mover.opponent
            result = True  # no move: the mover wins
            for s in _successor_keys(k, mover):
                result = False
                if not wins(s, opp):
                    result = True
                    break
            table[(k, mover)] = result
            if len(table) - start > limit:
                raise BudgetExceeded("oracle state budget exhausted", len(table) - start)
            return result

        needed = 4 * budget.max_total_mass + 100
        if sys.getrecursionlimit() < needed:
            sys.setrecursionlimit(needed)
        try:
            wins(key, LEFT)
            wins(key, RIGHT)
        finally:
            self.last_states = len(table) - start

    def outcome(self, position, budget: SearchBudget | None = None) -> Outcome:
        budget = budget or SearchBudget()
        key = canonical_key(position)
        mass = sum(b.mass for b in key)
        if mass > budget.max_total_mass:
            raise BudgetExceeded(
                f"total bump mass {mass} exceeds limit {budget.max_total_mass}", 0)
        self._solve(key, budget)
        return Outcome(
            LEFT if self.table[(key, LEFT)] else RIGHT,
            RIGHT if self.table[(key, RIGHT)] else LEFT,
        )

    def mover_wins(self, position, player: Player, budget: SearchBudget | None = None) -> bool:
        return self.outcome(position, budget).winner(player) is player

    def best_moves(self, position, player: Player,
                   budget: SearchBudget | None = None) -> list[Move]:
        """Moves after which the opponent, moving first, loses."""
        position = as_position(position)
        comps = position.components
        found = []
        for i, board in enumerate(comps):
            for k, succ in enumerate(board_successors(board, player), start=1):
                s = Position(comps[:i] + (succ,) + comps[i + 1:])
                if self.outcome(s, budget).winner(player.opponent) is player:
                    found.append(Move(i, player, k))
        return found


_DEFAULT = MisereSolver()


def default_solver() -> MisereSolver:
    return _DEFAULT


def misere_outcome(position, budget: SearchBudget | None = None) -> Outcome:
    """Exact misère outcome of a position (any number of components)."""
    return _DEFAULT.outcome(position, budget)


def best_moves_oracle(position, player: Player, budget: SearchBudget | None = None) -> list[Move]:
    return _DEFAULT.best_moves(position, player, budget)


def outcome_of_board(board: Board, budget: SearchBudget | None = None) -> Outcome:
    return _DEFAULT.outcome(Position((board,)), budget)
