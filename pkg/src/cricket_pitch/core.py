"""Positions, normalization and move generation for Cricket Pitch.

A board is stored as two sides, each a tuple of positive bump heights
indexed from the roller outward.  The written form ``"2,3,2|4,2"`` lists
the left side outermost-first, so ``"1,2,3|4,5"`` is stored as
``left=(3, 2, 1)`` and ``right=(4, 5)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class Player(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Player":
        t = text.strip().upper()
        if t in ("L", "LEFT"):
            return cls.LEFT
        if t in ("R", "RIGHT"):
            return cls.RIGHT
        raise ParseError(f"unknown player {text!r}", text)


LEFT = Player.LEFT
RIGHT = Player.RIGHT


class ParseError(ValueError):
    def __init__(self, message: str, token: str):
        super().__init__(message)
        self.token = token


class Board(NamedTuple):
    """One pitch.  Always normalized: no zero in either side."""

    left: tuple = ()
    right: tuple = ()

    @property
    def mass(self) -> int:
        return sum(self.left) + sum(self.right)

    @property
    def bumps(self) -> int:
        return len(self.left) + len(self.right)

    def side(self, player: Player) -> tuple:
        return self.left if player is LEFT else self.right

    def mirror(self) -> "Board":
        return Board(self.right, self.left)

    def __str__(self) -> str:
        return format_board(self)


EMPTY_BOARD = Board((), ())


def _zero_free_prefix(raw: Iterable[int]) -> tuple:
    out = []
    for x in raw:
        if x < 0:
            raise ValueError(f"negative bump height {x}")
        if x == 0:
            break
        out.append(x)
    return tuple(out)


def normalize(left_raw: Sequence[int], right_raw: Sequence[int]) -> Board:
    """Cut each side at its first zero, scanning from the roller outward."""
    return Board(_zero_free_prefix(left_raw), _zero_free_prefix(right_raw))


def _roll(near: tuple, far: tuple, k: int) -> tuple[tuple, tuple]:
    """Roll over the first ``k`` bumps of ``near``; returns (near', far')."""
    passed = near[k - 1::-1]
    new_far = []
    for x in passed:
        if x == 1:
            # a zero now sits next to the roller on this side
            return near[k:], tuple(new_far)
        new_far.append(x - 1)
    return near[k:], tuple(new_far) + far


def board_successors(board: Board, player: Player) -> list[Board]:
    """Successor boards for k = 1..len(side), in increasing k."""
    left, right = board
    out = []
    if player is LEFT:
        for k in range(1, len(left) + 1):
            near, far = _roll(left, right, k)
            out.append(Board(near, far))
    else:
        for k in range(1, len(right) + 1):
            near, far = _roll(right, left, k)
            out.append(Board(far, near))
    return out


def apply_board_move(board: Board, player: Player, k: int) -> Board:
    side = board.side(player)
    if not 1 <= k <= len(side):
        raise ValueError(f"illegal roll of {k} on a side of length {len(side)}")
    if player is LEFT:
        near, far = _roll(board.left, board.right, k)
        return Board(near, far)
    near, far = _roll(board.right, board.left, k)
    return Board(far, near)


@dataclass(frozen=True, order=True)
class Move:
    component: int
    direction: Player
    k: int

    def __str__(self) -> str:
        return f"{self.direction} {self.k}" + (f" @{self.component}" if self.component else "")


class Position:
    """A disjunctive sum of boards.  Components are kept in sorted order."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Board] = ()):
        comps = []
        for b in components:
            if not isinstance(b, Board):
                b = normalize(*b)
            comps.append(b)
        object.__setattr__(self, "components", tuple(sorted(comps)))

    def __setattr__(self, name, value):
        raise AttributeError("Position is immutable")

    @classmethod
    def of(cls, *boards: Board) -> "Position":
        return cls(boards)

    def __add__(self, other: "Position | Board") -> "Position":
        if isinstance(other, Board):
            return Position(self.components + (other,))
        return Position(self.components + other.components)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Position) and self.components == other.components

    def __hash__(self) -> int:
        return hash(("Position", self.components))

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Board]:
        return iter(self.components)

    def __getitem__(self, i: int) -> Board:
        return self.components[i]

    @property
    def mass(self) -> int:
        return sum(b.mass for b in self.components)

    def __repr__(self) -> str:
        return f"Position({format_position(self)!r})"

    def __str__(self) -> str:
        return format_position(self)


ZERO = Position()


def as_position(p: "Position | Board | str") -> Position:
    if isinstance(p, Position):
        return p
    if isinstance(p, Board):
        return Position((p,))
    return parse_position(p)


def moves(position: Position, player: Player) -> list[tuple[Move, Position]]:
    """All legal moves for ``player`` with their successor positions."""
    out = []
    comps = position.components
    for i, board in enumerate(comps):
        for k, succ in enumerate(board_successors(board, player), start=1):
            out.append((Move(i, player, k), Position(comps[:i] + (succ,) + comps[i + 1:])))
    return out


def has_move(position: Position, player: Player) -> bool:
    if player is LEFT:
        return any(b.left for b in position.components)
    return any(b.right for b in position.components)


def mirror(position: "Position | Board"):
    if isinstance(position, Board):
        return position.mirror()
    return Position(b.mirror() for b in position.components)


# ---------------------------------------------------------------- notation

_INT = re.compile(r"\d+")


def _parse_side(text: str, outer_first: bool) -> tuple:
    text = text.strip()
    if not text:
        return ()
    vals = []
    for tok in text.split(","):
        tok = tok.strip()
        if not _INT.fullmatch(tok):
            raise ParseError(f"bad bump height {tok!r}", tok)
        v = int(tok)
        if v < 1:
            raise ParseError(f"bump heights must be positive, got {tok!r}", tok)
        vals.append(v)
    return tuple(reversed(vals)) if outer_first else tuple(vals)


def parse_board(text: str) -> Board:
    if text.count("|") != 1:
        raise ParseError(f"board needs exactly one '|': {text.strip()!r}", text.strip())
    lhs, rhs = text.split("|")
    return Board(_parse_side(lhs, outer_first=True), _parse_side(rhs, outer_first=False))


def parse_position(text: str) -> Position:
    """Parse ``board ("+" board)*`` or ``"0"``."""
    if text.strip() == "0":
        return ZERO
    if not text.strip():
        raise ParseError("empty position text", "")
    return Position(parse_board(part) for part in text.split("+"))


def format_board(board: Board) -> str:
    return ",".join(map(str, reversed(board.left))) + "|" + ",".join(map(str, board.right))


def format_position(position: Position) -> str:
    if not position.components:
        return "0"
    return " + ".join(format_board(b) for b in position.components)
