"""Slow, obviously-correct references used only by the tests."""

from functools import lru_cache

from cricket_pitch.core import LEFT, RIGHT, Position, moves


@lru_cache(maxsize=None)
def mover_wins(pos: Position, player) -> bool:
    succ = moves(pos, player)
    if not succ:
        return True
    return any(not mover_wins(s, player.opponent) for _, s in succ)


def outcome_name(pos: Position) -> str:
    ol = LEFT if mover_wins(pos, LEFT) else RIGHT
    orr = RIGHT if mover_wins(pos, RIGHT) else LEFT
    return {(LEFT, LEFT): "L", (LEFT, RIGHT): "N", (RIGHT, LEFT): "P", (RIGHT, RIGHT): "R"}[ol, orr]


def m_stat_by_definition(side):
    """max{i : a_i odd and a_i <= a_j for all j < i}, 1-based; None if empty set."""
    cands = [i for i in range(1, len(side) + 1)
             if side[i - 1] % 2 == 1 and all(side[i - 1] <= side[j - 1] for j in range(1, i))]
    if not cands:
        return None
    return max(cands), side[max(cands) - 1]
