"""Misère Cricket Pitch: exact search, closed-form single-board outcomes,
and reductions for sums of one-bump boards."""

from .algebra import (
    DistinguishReport,
    EnumerationBound,
    OneBumpCanon,
    check_equiv_sampled,
    distinguish,
    one_bump_sum_outcome,
    reduce_one_bump,
)
from .classifier import MStat, SideClass, classify, m_stat, side_class, strip_odd_tail, winning_moves
from .core import (
    LEFT,
    RIGHT,
    ZERO,
    Board,
    Move,
    ParseError,
    Player,
    Position,
    has_move,
    mirror,
    moves,
    normalize,
    parse_board,
    parse_position,
)
from .oracle import (
    BudgetExceeded,
    MisereSolver,
    Outcome,
    SearchBudget,
    best_moves_oracle,
    canonical_key,
    misere_outcome,
)

__version__ = "0.1.0"
