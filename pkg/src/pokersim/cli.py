"""Command-line front end: ``eval``, ``replay``, ``dump`` and ``bench``.

Exit codes: 0 on success, 1 for usage or input errors, 2 when a replayed
hand breaks the rules.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from .cards import as_cards
from .evaluation import LookupKind, dump_ordered_hands, get_lookup, hand_from_cards, hand_from_game, hand_type
from .history import ReplayError, ScriptError, parse_script, replay

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RULES = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(message: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def cmd_eval(args) -> int:
    try:
        kind = hand_type(args.hand_type)
        hole = as_cards(args.hole)
        board = as_cards(args.board)
        hand = None
        if not board and len(hole) == kind.arity:
            try:
                hand = hand_from_cards(kind, hole)
            except ValueError:
                pass  # a non-qualifying hand; the game path reports None
        if hand is None:
            hand = hand_from_game(kind, hole, board)
    except ValueError as error:
        return _fail(str(error))
    if hand is None:
        print("no qualifying hand")
    else:
        print(f"{hand.identity.category}\t{hand.identity.cards}\t{hand.strength}")
    return EXIT_OK


def cmd_replay(args) -> int:
    try:
        text = Path(args.script).read_text(encoding="utf-8")
    except OSError as error:
        return _fail(str(error))
    try:
        state = replay(parse_script(text), args.seed)
    except ReplayError as error:
        return _fail(str(error), EXIT_RULES)
    except ScriptError as error:
        return _fail(str(error))
    for amount in state.pot_history:
        print(f"pot {amount}")
    if state.status:
        print(f"warning: hand unfinished in the {state.phase.value} phase", file=sys.stderr)
    print(" ".join(map(str, state.stacks)))
    return EXIT_OK


def cmd_dump(args) -> int:
    try:
        kind = LookupKind(args.kind)
    except ValueError:
        return _fail(f"unknown lookup {args.kind!r}")
    data = dump_ordered_hands(get_lookup(kind)).encode("utf-8")
    try:
        Path(args.output).write_bytes(data)
    except OSError as error:
        return _fail(str(error))
    print(f"{hashlib.md5(data).hexdigest()}  {args.output}")
    return EXIT_OK


def cmd_bench(args) -> int:
    from .bench import sweep_exact, sweep_seven

    try:
        lookup = get_lookup(LookupKind(args.kind))
    except ValueError:
        return _fail(f"unknown lookup {args.kind!r}")
    try:
        result = sweep_seven(lookup) if args.mode == "all-7-card" else sweep_exact(lookup)
    except ValueError as error:
        return _fail(str(error))
    verdict = "ok" if result.classes == lookup.class_count else "MISMATCH"
    print(f"hands {result.hands}")
    print(f"seconds {result.seconds:.3f}")
    print(f"rate {result.rate:.1f} hands/s")
    print(f"classes {result.classes} (table has {lookup.class_count}) {verdict}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pokersim", description="Poker hand evaluation and game replay.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a hand")
    p.add_argument("hand_type", help="e.g. standard-high, omaha-holdem, badugi")
    p.add_argument("hole", help="hole cards, or the whole hand, e.g. AsKsQsJsTs")
    p.add_argument("board", nargs="?", default="", help="board cards")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("replay", help="replay a hand-history script")
    p.add_argument("script")
    p.add_argument("--seed", type=int, help="override the script's deck seed")
    p.set_defaults(func=cmd_replay)

    kinds = [k.value for k in LookupKind]
    p = sub.add_parser("dump", help="write the ordered hands of a lookup and print its MD5")
    p.add_argument("kind", choices=kinds)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("bench", help="evaluate every hand of a lookup's deck")
    p.add_argument("kind", choices=kinds)
    p.add_argument("--mode", choices=["all-5-card", "all-7-card"], default="all-5-card")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
