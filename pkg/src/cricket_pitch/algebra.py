"""Reductions of one-bump boards, sums of one-bump boards, and bounded
searches for positions that tell two games apart.

Equivalence here is only ever evidence: ``X`` ranges over Cricket Pitch
sums inside an enumeration bound, not over every Blocking game.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import Board, Position, as_position
from .oracle import L_WIN, N_WIN, R_WIN, Outcome, SearchBudget, misere_outcome


class NotOneBumpError(ValueError):
    pass


class OneBumpCanon(enum.Enum):
    ZERO = "0"
    LEFT_UNIT = "|1"     # Left wins
    RIGHT_UNIT = "1|"    # Right wins

    @property
    def board(self) -> Board:
        return {"0": Board(), "|1": Board((), (1,)), "1|": Board((1,), ())}[self.value]

    def __str__(self) -> str:
        return self.value


def _single_bump(board: Board) -> tuple[int, bool]:
    """(height, on_left) for a one-bump board."""
    if board.bumps != 1:
        raise NotOneBumpError(f"expected a one-bump board, got {board} with {board.bumps} bumps")
    if board.left:
        return board.left[0], True
    return board.right[0], False


def reduce_one_bump(board: Board) -> OneBumpCanon:
    height, on_left = _single_bump(board)
    if height % 2 == 0:
        return OneBumpCanon.ZERO
    return OneBumpCanon.RIGHT_UNIT if on_left else OneBumpCanon.LEFT_UNIT


def one_bump_sum_outcome(components: Iterable[Board]) -> Outcome:
    """Outcome of a sum of one-bump boards.

    Even bumps vanish.  An odd bump right of the roller is a unit for Left
    (``|1`` is a Left win) and one on the left is a unit for Right.  Units
    of opposite sign cancel in pairs.
    """
    lefts = rights = 0
    for b in components:
        c = reduce_one_bump(b)
        if c is OneBumpCanon.LEFT_UNIT:
            lefts += 1
        elif c is OneBumpCanon.RIGHT_UNIT:
            rights += 1
    if lefts > rights:
        return L_WIN
    if lefts < rights:
        return R_WIN
    return N_WIN


# ------------------------------------------------------------ enumeration

def _compositions(total: int, max_parts: int) -> Iterator[tuple]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first,) + rest


def boards_of_mass(mass: int, max_bumps: int | None = None,
                   max_side_bumps: int | None = None) -> Iterator[Board]:
    """Every normalized board with exactly ``mass`` total bump height."""
    limit = mass if max_bumps is None else max_bumps
    for seq in _compositions(mass, limit):
        for cut in range(len(seq) + 1):
            left, right = seq[:cut][::-1], seq[cut:]
            if max_side_bumps is not None and max(len(left), len(right)) > max_side_bumps:
                continue
            yield Board(left, right)


def enumerate_boards(max_mass: int, max_bumps: int | None = None,
                     max_side_bumps: int | None = None) -> list[Board]:
    out = []
    for m in range(max_mass + 1):
        out.extend(boards_of_mass(m, max_bumps, max_side_bumps))
    return out


@dataclass(frozen=True)
class EnumerationBound:
    """Limits on the test positions X.

    ``max_board_mass`` caps each component; ``max_total_mass`` caps the sum.
    """

    max_components: int = 2
    max_total_mass: int = 6
    max_board_mass: int | None = None
    max_side_bumps: int | None = None
    include_empty_boards: bool = True


def enumerate_positions(bound: EnumerationBound) -> list[Position]:
    """All X within ``bound``, ordered by mass, then component count, then key."""
    board_cap = bound.max_total_mass if bound.max_board_mass is None else bound.max_board_mass
    boards = enumerate_boards(min(board_cap, bound.max_total_mass),
                              max_side_bumps=bound.max_side_bumps)
    if not bound.include_empty_boards:
        boards = [b for b in boards if b.bumps]
    boards.sort()
    masses = {b: b.mass for b in boards}
    found = []

    def extend(start: int, chosen: tuple, mass: int):
        found.append((mass, len(chosen), chosen))
        if len(chosen) == bound.max_components:
            return
        for i in range(start, len(boards)):
            b = boards[i]
            if mass + masses[b] <= bound.max_total_mass:
                extend(i, chosen + (b,), mass + masses[b])

    extend(0, (), 0)
    found.sort()
    return [Position(chosen) for _, _, chosen in found]


# ------------------------------------------------------- distinguishing

@dataclass
class DistinguishReport:
    g: Position
    h: Position
    bound: EnumerationBound
    searched: int = 0
    witness: Position | None = None
    g_outcome: Outcome | None = None   # o(g + witness)
    h_outcome: Outcome | None = None   # o(h + witness)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def summary(self) -> str:
        if self.found:
            return (f"witness X = {self.witness}: o(G+X) = {self.g_outcome}, "
                    f"o(H+X) = {self.h_outcome} (after {self.searched} candidates)")
        return (f"no witness within bound ({self.searched} candidates searched); "
                "this is not a proof of equivalence")


def distinguish(g, h, bound: EnumerationBound | None = None,
                budget: SearchBudget | None = None) -> DistinguishReport:
    """Search X in enumeration order for o(g + X) != o(h + X)."""
    g, h = as_position(g), as_position(h)
    bound = bound or EnumerationBound()
    report = DistinguishReport(g, h, bound)
    for x in enumerate_positions(bound):
        report.searched += 1
        og, oh = misere_outcome(g + x, budget), misere_outcome(h + x, budget)
        if og != oh:
            report.witness, report.g_outcome, report.h_outcome = x, og, oh
            break
    return report


@dataclass
class EquivReport:
    agreements: int = 0
    disagreements: list = field(default_factory=list)  # (X, o(g+X), o(h+X))

    @property
    def total(self) -> int:
        return self.agreements + len(self.disagreements)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def check_equiv_sampled(g, h, xs: Iterable, budget: SearchBudget | None = None) -> EquivReport:
    g, h = as_position(g), as_position(h)
    report = EquivReport()
    for x in xs:
        x = as_position(x)
        og, oh = misere_outcome(g + x, budget), misere_outcome(h + x, budget)
        if og == oh:
            report.agreements += 1
        else:
            report.disagreements.append((x, og, oh))
    return report


def single_boards_upto(max_mass: int) -> list[Position]:
    """Every single-board position of mass <= ``max_mass``, as X candidates."""
    return [Position((b,)) for b in enumerate_boards(max_mass)]


def pairs_upto(max_board_mass: int) -> list[Position]:
    """All sums of at most two boards, each of mass <= ``max_board_mass``."""
    boards = sorted(enumerate_boards(max_board_mass))
    out = [Position()]
    out.extend(Position((b,)) for b in boards)
    out.extend(Position(pair) for pair in itertools.combinations_with_replacement(boards, 2))
    return out
