"""``cpitch`` command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import TextIO

from . import algebra, classifier, verify
from .core import (
    LEFT,
    Board,
    Move,
    ParseError,
    Player,
    Position,
    apply_board_move,
    format_board,
    has_move,
    moves,
    parse_position,
)
from .oracle import BudgetExceeded, MisereSolver, Outcome, SearchBudget, default_solver

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3

REPORT_FIELDS = ("position", "outcome", "oL", "oR", "trace", "witness", "states", "millis")


class UsageError(Exception):
    """Bad invocation; reported with exit status 2."""


@dataclass
class Report:
    position: str
    outcome: Outcome | None = None
    trace: list | None = None
    witness: dict | None = None
    states: int | None = None
    millis: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        rec = {
            "position": self.position,
            "outcome": self.outcome.name if self.outcome else None,
            "oL": str(self.outcome.left_starts) if self.outcome else None,
            "oR": str(self.outcome.right_starts) if self.outcome else None,
            "trace": [s.to_json() for s in self.trace] if self.trace is not None else None,
            "witness": self.witness,
            "states": self.states,
            "millis": round(self.millis, 3),
        }
        rec.update(self.extra)
        return json.dumps(rec, sort_keys=False)

    def outcome_text(self) -> str:
        o = self.outcome
        return f"{o.name} (oL={o.left_starts}, oR={o.right_starts})"


def _budget(args) -> SearchBudget:
    return SearchBudget.from_env(getattr(args, "max_states", None))


def _single_board(pos: Position) -> Board | None:
    return pos.components[0] if len(pos) == 1 else None


def tie_break(candidates: list[Move]) -> Move | None:
    """Smallest roll first, Left-ward before Right-ward, then lowest component."""
    if not candidates:
        return None
    return min(candidates, key=lambda m: (m.k, m.direction is not LEFT, m.component))


def _winning_moves(pos: Position, player: Player, solver: MisereSolver,
                   budget: SearchBudget) -> list[Move]:
    board = _single_board(pos)
    if board is not None:
        return classifier.winning_moves(board, player)
    return solver.best_moves(pos, player, budget)


def _fmt_move(m: Move, pos: Position) -> str:
    where = f" in component {m.component} ({format_board(pos[m.component])})" if len(pos) > 1 else ""
    return f"{m.direction} {m.k}{where}"


# ---------------------------------------------------------------- commands

def cmd_outcome(args, out: TextIO) -> int:
    pos = parse_position(args.position)
    board = _single_board(pos)
    t0 = time.perf_counter()
    if board is not None and not args.oracle:
        result, trace = classifier.classify(board)
        rep = Report(str(pos), result, trace if args.trace or args.json else None)
    elif args.oracle:
        solver = default_solver()
        result = solver.outcome(pos, _budget(args))
        rep = Report(str(pos), result, states=solver.last_states)
    else:
        raise UsageError(
            f"{pos} has {len(pos)} components; the closed form covers single boards only. "
            "Re-run with --oracle for exhaustive search, or use `sum` for one-bump components.")
    rep.millis = (time.perf_counter() - t0) * 1000
    if args.json:
        print(rep.to_json(), file=out)
        return EXIT_OK
    print(rep.outcome.name, file=out)
    if args.trace and rep.trace:
        for step in rep.trace:
            print(f"  {step}", file=out)
    return EXIT_OK


def cmd_oracle(args, out: TextIO) -> int:
    pos = parse_position(args.position)
    solver = default_solver()
    t0 = time.perf_counter()
    result = solver.outcome(pos, _budget(args))
    rep = Report(str(pos), result, states=solver.last_states,
                 millis=(time.perf_counter() - t0) * 1000)
    print(rep.to_json() if args.json else rep.outcome_text(), file=out)
    return EXIT_OK


def cmd_best_move(args, out: TextIO) -> int:
    pos = parse_position(args.position)
    player = Player.parse(args.player)
    found = _winning_moves(pos, player, default_solver(), _budget(args))
    best = tie_break(found)
    if args.json:
        rep = Report(str(pos), extra={
            "player": str(player),
            "moves": [{"component": m.component, "direction": str(m.direction), "k": m.k} for m in found],
            "best": None if best is None else {"component": best.component, "k": best.k},
        })
        print(rep.to_json(), file=out)
        return EXIT_OK
    if not has_move(pos, player):
        print(f"{player} has no move (and wins under misère play)", file=out)
    elif best is None:
        print(f"no winning move for {player}", file=out)
    else:
        print(f"best: {_fmt_move(best, pos)}", file=out)
        print("winning: " + ", ".join(_fmt_move(m, pos) for m in found), file=out)
    return EXIT_OK


def cmd_reduce(args, out: TextIO) -> int:
    pos = parse_position(args.position)
    for board in pos:
        line = f"{format_board(board)} -> {format_board(classifier.reduce_board(board))}"
        if board.bumps == 1:
            line += f"  [one-bump: {algebra.reduce_one_bump(board)}]"
        print(line, file=out)
    return EXIT_OK


def cmd_sum(args, out: TextIO) -> int:
    pos = Position(b for text in args.positions for b in parse_position(text))
    t0 = time.perf_counter()
    if all(b.bumps == 1 for b in pos):
        result, method, states = algebra.one_bump_sum_outcome(pos), "one-bump", None
    else:
        solver = default_solver()
        result, method, states = solver.outcome(pos, _budget(args)), "oracle", solver.last_states
    rep = Report(str(pos), result, states=states, millis=(time.perf_counter() - t0) * 1000,
                 extra={"method": method})
    print(rep.to_json() if args.json else f"{rep.outcome_text()} via {method}", file=out)
    return EXIT_OK


def cmd_distinguish(args, out: TextIO) -> int:
    g, h = parse_position(args.g), parse_position(args.h)
    bound = algebra.EnumerationBound(max_components=args.max_components,
                                     max_total_mass=args.max_mass)
    t0 = time.perf_counter()
    rep = algebra.distinguish(g, h, bound, _budget(args))
    millis = (time.perf_counter() - t0) * 1000
    if args.json:
        witness = None
        if rep.found:
            witness = {"X": str(rep.witness), "oGX": rep.g_outcome.name, "oHX": rep.h_outcome.name}
        r = Report(f"{g} vs {h}", witness=witness, millis=millis,
                   extra={"searched": rep.searched, "max_mass": args.max_mass,
                          "max_components": args.max_components})
        print(r.to_json(), file=out)
    else:
        print(rep.summary(), file=out)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        res = verify.run_suite(name, args.max_mass)
        print(res.line(), file=out)
        for note in res.notes:
            print(f"  {note}", file=out)
        for detail in res.failures[:5]:
            print(f"  counterexample: {detail}", file=out)
        failed += not res.passed
    print(f"{len(names) - failed}/{len(names)} suites passed", file=out)
    return EXIT_VERIFY if failed else EXIT_OK


def _engine_move(pos: Position, player: Player, budget: SearchBudget) -> Move:
    found = _winning_moves(pos, player, default_solver(), budget)
    return tie_break(found) or tie_break([m for m, _ in moves(pos, player)])


def _apply(pos: Position, m: Move) -> Position:
    comps = list(pos.components)
    comps[m.component] = apply_board_move(comps[m.component], m.direction, m.k)
    return Position(comps)


def _read_move(line: str, human: Player, pos: Position) -> Move:
    parts = line.split()
    if len(parts) not in (2, 3):
        raise ValueError("enter a move as 'L k' or 'R k' (optionally followed by a component index)")
    who = Player.parse(parts[0])
    if who is not human:
        raise ValueError(f"you are playing {human}")
    k = int(parts[1])
    comp = int(parts[2]) if len(parts) == 3 else 0
    if not 0 <= comp < len(pos):
        raise ValueError(f"no component {comp}")
    if not 1 <= k <= len(pos[comp].side(who)):
        raise ValueError(f"cannot roll over {k} bumps there")
    return Move(comp, who, k)


def cmd_play(args, out: TextIO, inp: TextIO) -> int:
    pos = parse_position(args.position)
    human = Player.parse(args.human)
    to_move = Player.parse(args.first)
    budget = _budget(args)
    while True:
        print(f"position: {pos}   ({to_move} to move)", file=out)
        if not has_move(pos, to_move):
            print(f"{to_move} has no move and wins (misère play)", file=out)
            return EXIT_OK
        if to_move is human:
            out.write("your move> ")
            out.flush()
            line = inp.readline()
            if not line:
                print("\nbye", file=out)
                return EXIT_OK
            if line.strip().lower() in ("q", "quit", "exit"):
                return EXIT_OK
            try:
                m = _read_move(line, human, pos)
            except ValueError as exc:
                print(f"  {exc}", file=out)
                continue
        else:
            m = _engine_move(pos, to_move, budget)
            print(f"engine plays {_fmt_move(m, pos)}", file=out)
        pos = _apply(pos, m)
        to_move = to_move.opponent


def random_board(bumps: int, seed: int) -> Board:
    rng = random.Random(seed)
    heights = [rng.randint(1, 9) for _ in range(bumps)]
    cut = rng.randint(0, bumps)
    return Board(tuple(reversed(heights[:cut])), tuple(heights[cut:]))


def cmd_bench(args, out: TextIO) -> int:
    board = random_board(args.bumps, args.seed)
    timings = []
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        result, trace = classifier.classify(board)
        timings.append(time.perf_counter() - t0)
    best = min(timings)
    rate = args.bumps / best if best > 0 else float("inf")
    rep = Report(f"random board, {args.bumps} bumps, seed {args.seed}", result, trace,
                 millis=best * 1000, extra={"seed": args.seed, "bumps": args.bumps,
                                            "bumps_per_sec": rate})
    if args.json:
        print(rep.to_json(), file=out)
    else:
        print(f"seed={args.seed} bumps={args.bumps} outcome={result.name} "
              f"best={best * 1000:.2f}ms rate={rate:,.0f} bumps/sec", file=out)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpitch",
        description="Outcomes of misère Cricket Pitch positions.  Positions are written "
                    "like \"2,3,2|4,2\" (left side outermost first), sums with '+', "
                    "and \"0\" for the empty sum.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgeted(p):
        p.add_argument("--max-states", type=int, default=None,
                       help="oracle state budget (default: $CPITCH_MAX_STATES or 10^7)")

    p = sub.add_parser("outcome", help="closed-form outcome of a single board")
    p.add_argument("position")
    p.add_argument("--trace", action="store_true", help="print the rules applied")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="use exhaustive search (allows sums)")
    budgeted(p)
    p.set_defaults(handler=cmd_outcome)

    p = sub.add_parser("oracle", help="exhaustive misère search")
    p.add_argument("position")
    p.add_argument("--json", action="store_true")
    budgeted(p)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("best-move", help="winning moves for a player")
    p.add_argument("position")
    p.add_argument("--player", required=True, choices=["L", "R"])
    p.add_argument("--json", action="store_true")
    budgeted(p)
    p.set_defaults(handler=cmd_best_move)

    p = sub.add_parser("reduce", help="odd-tail reduction and one-bump canonical forms")
    p.add_argument("position")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("sum", help="outcome of a disjunctive sum")
    p.add_argument("positions", nargs="+")
    p.add_argument("--json", action="store_true")
    budgeted(p)
    p.set_defaults(handler=cmd_sum)

    p = sub.add_parser("distinguish", help="search for X with o(G+X) != o(H+X)")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--max-mass", type=int, default=6)
    p.add_argument("--max-components", type=int, default=2)
    p.add_argument("--json", action="store_true")
    budgeted(p)
    p.set_defaults(handler=cmd_distinguish)

    p = sub.add_parser("verify", help="run the exhaustive check suites")
    p.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    p.add_argument("--max-mass", type=int, default=None,
                   help="mass bound (default: 14 for single boards, 6 per board for reductions)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("play", help="play against the engine")
    p.add_argument("position")
    p.add_argument("--human", required=True, choices=["L", "R"])
    p.add_argument("--first", default="L", choices=["L", "R"])
    budgeted(p)
    p.set_defaults(handler=cmd_play)

    p = sub.add_parser("bench", help="time the classifier on a random board")
    p.add_argument("--bumps", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_bench)
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = out or sys.stdout
    inp = inp or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.handler is cmd_play:
            return cmd_play(args, out, inp)
        return args.handler(args, out)
    except ParseError as exc:
        print(f"parse error at {exc.token!r}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
