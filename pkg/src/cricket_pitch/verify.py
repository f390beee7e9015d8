"""Exhaustive checks of the outcome results against the oracle.

Each suite returns a :class:`SuiteResult`; the ``verify`` command and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .algebra import enumerate_boards, one_bump_sum_outcome, pairs_upto
from .classifier import SideClass, classify, m_stat, reduce_board, side_class
from .core import LEFT, RIGHT, Board, Position, board_successors, parse_position
from .oracle import L_WIN, N_WIN, P_WIN, R_WIN, Outcome, misere_outcome

SINGLE_MAX_MASS = 14
SINGLE_MAX_BUMPS = 7
REDUCTION_BOARD_MASS = 6
ONE_BUMP_MAX_COMPONENTS = 4
ONE_BUMP_MAX_HEIGHT = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: {self.checked - len(self.failures)}/{self.checked} "
                f"checks passed in {self.seconds:.1f}s")


def _o(position, budget=None):
    return misere_outcome(position, budget)


def _single(board: Board) -> Position:
    return Position((board,))


def single_boards(max_mass: int = SINGLE_MAX_MASS, max_bumps: int = SINGLE_MAX_BUMPS) -> list[Board]:
    return enumerate_boards(max_mass, max_bumps=max_bumps)


def suite_classifier(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    res = SuiteResult("classifier")
    for b in single_boards(max_mass):
        c, o = classify(b)[0], _o(_single(b))
        res.check(c == o, (str(b), c.name, o.name))
    return res


def suite_one_side(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    res = SuiteResult("one-side")
    for b in single_boards(max_mass):
        if not b.bumps or (b.left and b.right):
            continue
        side = b.left or b.right
        if any(x % 2 == 0 for x in side):
            want = N_WIN
        else:
            want = R_WIN if b.left else L_WIN
        got = _o(_single(b))
        res.check(got == want, (str(b), want.name, got.name))
    return res


def suite_removeodd(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    """Dropping one outer odd bump, and whole odd tails, keeps the outcome."""
    res = SuiteResult("removeodd")
    for b in single_boards(max_mass):
        for side_name in ("left", "right"):
            side = getattr(b, side_name)
            if len(side) >= 2 and side[-1] % 2 == 1:
                shorter = b._replace(**{side_name: side[:-1]})
                o1, o2 = _o(_single(b)), _o(_single(shorter))
                res.check(o1 == o2, (str(b), str(shorter), o1.name, o2.name))
        red = reduce_board(b)
        if red != b:
            o1, o2 = _o(_single(b)), _o(_single(red))
            res.check(o1 == o2, (str(b), str(red), o1.name, o2.name))
    return res


_THEOREM1 = {(SideClass.ALL_ODD, SideClass.ALL_ODD): P_WIN,
             (SideClass.ALL_ODD, SideClass.HAS_EVEN): R_WIN,
             (SideClass.HAS_EVEN, SideClass.ALL_ODD): L_WIN}


def suite_theorem1(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    res = SuiteResult("theorem1")
    for b in single_boards(max_mass):
        pair = (side_class(b.left), side_class(b.right))
        if pair in _THEOREM1:
            got = _o(_single(b))
            res.check(got == _THEOREM1[pair], (str(b), _THEOREM1[pair].name, got.name))
    return res


def suite_theorem2(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    """Reduced boards with an even bump on both sides, judged by M values."""
    res = SuiteResult("theorem2")
    for b in single_boards(max_mass):
        if not (b.left and b.right and b.left[-1] % 2 == 0 and b.right[-1] % 2 == 0):
            continue
        ma, mb = m_stat(b.left).value, m_stat(b.right).value
        if ma < mb:
            want = L_WIN
        elif ma > mb:
            want = R_WIN
        elif ma != float("inf"):
            want = N_WIN
        else:
            want = P_WIN
        got = _o(_single(b))
        res.check(got == want, (str(b), want.name, got.name))
    return res


REDUCTION_PAIRS = [
    ("2|", "0"), ("4|", "0"), ("3|", "1|"), ("5|", "1|"), ("|1 + 1|", "0"),
    ("|2", "0"), ("|4", "0"), ("|3", "|1"), ("|5", "|1"),
]


def suite_reductions(max_board_mass: int = REDUCTION_BOARD_MASS) -> SuiteResult:
    """o(G + X) = o(H + X) for each reduction G = H, X any sum of <= 2 boards."""
    res = SuiteResult("reductions")
    xs = pairs_upto(max_board_mass)
    for gs, hs in REDUCTION_PAIRS:
        g, h = parse_position(gs), parse_position(hs)
        bad = 0
        for x in xs:
            og, oh = _o(g + x), _o(h + x)
            if og != oh:
                bad += 1
            res.check(og == oh, (gs, hs, str(x), og.name, oh.name))
        res.notes.append(f"{gs} = {hs}: {len(xs) - bad}/{len(xs)} X agree")
    return res


def one_bump_multisets(max_components: int = ONE_BUMP_MAX_COMPONENTS,
                       max_height: int = ONE_BUMP_MAX_HEIGHT) -> list[tuple[Board, ...]]:
    singles = [Board((h,), ()) for h in range(1, max_height + 1)]
    singles += [Board((), (h,)) for h in range(1, max_height + 1)]
    out = []
    for n in range(max_components + 1):
        out.extend(itertools.combinations_with_replacement(singles, n))
    return out


def literal_label_outcome(components) -> Outcome:
    """The sum rule with the labels exactly as printed: ``|1`` counted for Right."""
    mirrored = [Board(b.right, b.left) for b in components]
    return one_bump_sum_outcome(mirrored)


def suite_disj_sum(max_components: int = ONE_BUMP_MAX_COMPONENTS,
                   max_height: int = ONE_BUMP_MAX_HEIGHT) -> SuiteResult:
    res = SuiteResult("disj-sum")
    for comps in one_bump_multisets(max_components, max_height):
        want, got = one_bump_sum_outcome(comps), _o(Position(comps))
        res.check(want == got, (str(Position(comps)), want.name, got.name))
    lit = literal_label_outcome([Board((), (1,))])
    real = _o(parse_position("|1"))
    res.check(lit != real, ("literal labels agree on |1", lit.name, real.name))
    res.notes.append(f"literal labeling gives o(|1) = {lit.name}, oracle gives {real.name}")
    return res


def suite_closure(max_mass: int = SINGLE_MAX_MASS) -> SuiteResult:
    """Hereditary closure, Blocking closure and conjugation symmetry."""
    res = SuiteResult("closure")
    for b in single_boards(max_mass):
        for p in (LEFT, RIGHT):
            one = set(board_successors(b, p))
            two = {s2 for s1 in one for s2 in board_successors(s1, p)}
            res.check(two <= one, ("hereditary", str(b), str(p)))
            if not b.side(p):
                ok = all(not s.side(p) or any(not t.side(p) for t in board_successors(s, p))
                         for s in board_successors(b, p.opponent))
                res.check(ok, ("blocking", str(b), str(p)))
        o, om = _o(_single(b)), _o(_single(b.mirror()))
        res.check(om == o.conjugate(), ("conjugate", str(b), o.name, om.name))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "classifier": suite_classifier,
    "one-side": suite_one_side,
    "removeodd": suite_removeodd,
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "reductions": suite_reductions,
    "disj-sum": suite_disj_sum,
    "closure": suite_closure,
}


def run_suite(name: str, max_mass: int | None = None) -> SuiteResult:
    fn = SUITES[name]
    start = time.perf_counter()
    if name == "disj-sum" or max_mass is None:
        res = fn()
    else:
        res = fn(max_mass)
    res.seconds = time.perf_counter() - start
    return res


def run_suites(name: str = "all", max_mass: int | None = None) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n, max_mass) for n in names]
