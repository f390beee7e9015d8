"""Closed-form outcome of a single Cricket Pitch board.

Each side is first classified on its own (a one-sided board is a
first-player win exactly when the side holds an even bump).  Three of the
four side pairs decide the board outright; the remaining (N, N) pair is
settled by stripping odd tails and comparing the pivotal odd bumps ``M``
of the two sides.  Everything is a single scan per side, so the cost is
linear in the number of bumps.  Long sides are scanned with numpy.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import LEFT, RIGHT, Board, Move, Player, apply_board_move
from .oracle import L_WIN, N_WIN, P_WIN, R_WIN, Outcome

_VECTOR_MIN = 64


class SideClass(enum.Enum):
    HAS_EVEN = "HasEven"
    ALL_ODD = "AllOdd"
    EMPTY = "Empty"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MStat:
    """Largest index of an odd bump no bigger than anything nearer the roller.

    ``index`` is 1-based from the roller; both fields are ``math.inf`` when
    no such bump exists.
    """

    index: float
    value: float

    @property
    def finite(self) -> bool:
        return self.index != math.inf

    def __str__(self) -> str:
        if not self.finite:
            return "(m=inf, M=inf)"
        return f"(m={self.index}, M={self.value})"

    def to_json(self):
        if not self.finite:
            return {"m": None, "M": None}
        return {"m": self.index, "M": self.value}


INFINITE = MStat(math.inf, math.inf)


@dataclass(frozen=True)
class Step:
    """One applied rule in a classification trace."""

    rule: str
    args: tuple = ()

    def __str__(self) -> str:
        return f"{self.rule}({', '.join(map(str, self.args))})" if self.args else self.rule

    def to_json(self):
        return {"rule": self.rule,
                "args": [a.to_json() if isinstance(a, MStat) else str(a) if isinstance(a, enum.Enum) else a
                         for a in self.args]}


def _array(side: tuple):
    """numpy view of a long side, or None when it should be scanned in Python."""
    if len(side) < _VECTOR_MIN:
        return None
    try:
        return np.frombuffer(bytes(side), dtype=np.uint8)
    except ValueError:
        pass
    try:
        return np.array(side, dtype=np.int64)
    except OverflowError:
        return None


def _even_mask(arr) -> np.ndarray:
    return (arr & 1) == 0


def side_class(side: tuple) -> SideClass:
    if not side:
        return SideClass.EMPTY
    arr = _array(side)
    if arr is not None:
        has_even = bool(_even_mask(arr).any())
    else:
        has_even = any(x % 2 == 0 for x in side)
    return SideClass.HAS_EVEN if has_even else SideClass.ALL_ODD


def strip_odd_tail(side: tuple) -> tuple:
    """Drop the odd bumps beyond the outermost even one.

    Sides without any even bump are returned unchanged.
    """
    arr = _array(side)
    if arr is not None:
        evens = np.flatnonzero(_even_mask(arr))
        if evens.size == 0:
            return side
        return side[: int(evens[-1]) + 1]
    for j in range(len(side) - 1, -1, -1):
        if side[j] % 2 == 0:
            return side[: j + 1]
    return side


def m_stat(side: tuple) -> MStat:
    arr = _array(side)
    if arr is not None:
        cand = np.flatnonzero(((arr & 1) == 1) & (arr == np.minimum.accumulate(arr)))
        if cand.size == 0:
            return INFINITE
        i = int(cand[-1])
        return MStat(i + 1, int(side[i]))
    best = INFINITE
    low = math.inf
    for i, x in enumerate(side, start=1):
        if x <= low:
            low = x
            if x % 2:
                best = MStat(i, x)
    return best


def _one_side_outcome(cls: SideClass, player_side: Player) -> Outcome:
    if cls is SideClass.HAS_EVEN:
        return N_WIN
    # all odd: the owner of the bumps loses either way
    return R_WIN if player_side is LEFT else L_WIN


_THEOREM1 = {("R", "L"): P_WIN, ("R", "N"): R_WIN, ("N", "L"): L_WIN}


def classify(board: Board) -> tuple[Outcome, list[Step]]:
    """Outcome of a single board together with the rules that produced it."""
    left, right = board
    lc, rc = side_class(left), side_class(right)
    if lc is SideClass.EMPTY and rc is SideClass.EMPTY:
        return N_WIN, [Step("EmptyBoth")]
    if rc is SideClass.EMPTY:
        return _one_side_outcome(lc, LEFT), [Step("OneSideOnly", ("left", lc))]
    if lc is SideClass.EMPTY:
        return _one_side_outcome(rc, RIGHT), [Step("OneSideOnly", ("right", rc))]

    pair = (_one_side_outcome(lc, LEFT).name, _one_side_outcome(rc, RIGHT).name)
    if pair in _THEOREM1:
        return _THEOREM1[pair], [Step("Theorem1Case", pair)]

    trace = []
    reduced = []
    for name, side in (("left", left), ("right", right)):
        stripped = strip_odd_tail(side)
        if len(stripped) < len(side):
            trace.append(Step("StrippedOddTail", (name, len(side) - len(stripped))))
        reduced.append(stripped)
    ma, mb = m_stat(reduced[0]), m_stat(reduced[1])
    if ma.value < mb.value:
        case, out = 1, L_WIN
    elif ma.value > mb.value:
        case, out = 2, R_WIN
    elif ma.finite:
        case, out = 3, N_WIN
    else:
        case, out = 4, P_WIN
    trace.append(Step("Theorem2Case", (case, ma, mb)))
    return out, trace


def outcome(board: Board) -> Outcome:
    return classify(board)[0]


def reduce_board(board: Board) -> Board:
    """Board with both odd tails removed where permitted."""
    return Board(strip_odd_tail(board.left), strip_odd_tail(board.right))


def winning_moves(board: Board, player: Player) -> list[Move]:
    """Moves whose successor is lost for the opponent moving first."""
    found = []
    for k in range(1, len(board.side(player)) + 1):
        succ = apply_board_move(board, player, k)
        if outcome(succ).winner(player.opponent) is player:
            found.append(Move(0, player, k))
    return found
