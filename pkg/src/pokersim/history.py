"""Line-oriented hand-history scripts.

A script is a header followed by one action per line::

    # comments start with a hash
    variant no-limit-texas-holdem
    antes 500
    blinds 1000 2000
    min-bet 2000
    stacks 1125600 2000000 553500
    automation dealer
    deal-hole Ac2d
    complete-bet-raise-to 7000
    ...

Header keys: ``variant``, ``antes``, ``blinds``, ``bring-in``, ``min-bet``,
``big-bet``, ``stacks``, ``seed`` or ``deck``, ``automation``. The
automation profile is ``dealer`` (everything automatable except hole and
board dealing, the default), ``all``, ``none`` or a comma list of
automation names.

Actions: ``post-ante [P]``, ``collect-bets``, ``post-blind [P]``,
``burn [CARD]``, ``deal-hole [CARDS [P]]``, ``deal-board [CARDS]``,
``stand-pat``, ``discard CARDS``, ``fold``, ``check-call``,
``post-bring-in``, ``complete-bet-raise-to N``, ``show``, ``muck``,
``kill-hand [P]``, ``push-chips``, ``pull-chips [P]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cards import as_cards
from .engine import (
    ALL_AUTOMATIONS,
    DEALER_AUTOMATIONS,
    NO_AUTOMATIONS,
    Automation,
    GameState,
    Operation,
    create_state,
)
from .variants import builtin_variant

HEADER_KEYS = (
    "variant", "antes", "blinds", "bring-in", "min-bet", "big-bet",
    "stacks", "seed", "deck", "automation",
)

# action name -> (engine method, argument kinds); "?" marks optional
ACTIONS = {
    "post-ante": ("post_ante", ("player?",)),
    "collect-bets": ("collect_bets", ()),
    "post-blind": ("post_blind_or_straddle", ("player?",)),
    "burn": ("burn_card", ("cards?",)),
    "deal-hole": ("deal_hole", ("cards?", "player?")),
    "deal-board": ("deal_board", ("cards?",)),
    "stand-pat": ("stand_pat_or_discard", ()),
    "discard": ("stand_pat_or_discard", ("cards",)),
    "fold": ("fold", ()),
    "check-call": ("check_or_call", ()),
    "post-bring-in": ("post_bring_in", ()),
    "complete-bet-raise-to": ("complete_bet_or_raise_to", ("amount",)),
    "show": ("show_or_muck_hole_cards", ()),
    "muck": ("show_or_muck_hole_cards", ()),
    "kill-hand": ("kill_hand", ("player?",)),
    "push-chips": ("push_chips", ()),
    "pull-chips": ("pull_chips", ("player?",)),
}

_PROFILES = {"dealer": DEALER_AUTOMATIONS, "all": ALL_AUTOMATIONS, "none": NO_AUTOMATIONS}


class ScriptError(ValueError):
    """A malformed script; ``line`` is 1-based, 0 when not tied to a line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class ReplayError(ScriptError):
    """A well-formed script whose setup or actions break the rules."""


@dataclass
class Action:
    name: str
    args: tuple[str, ...] = ()
    line: int = field(default=0, compare=False)

    def __str__(self) -> str:
        return " ".join((self.name, *self.args))


@dataclass
class HandHistoryScript:
    variant: str
    stacks: tuple[int, ...]
    antes: tuple[int, ...] = ()
    blinds: tuple[int, ...] = ()
    bring_in: int = 0
    min_bet: int | None = None
    big_bet: int | None = None
    seed: int | None = None
    deck: str | None = None
    automation: str = "dealer"
    actions: list[Action] = field(default_factory=list)

    def automations(self) -> frozenset[Automation]:
        return parse_automation(self.automation)

    def create_state(self, seed: int | None = None) -> GameState:
        variant = builtin_variant(self.variant, small_bet=self.min_bet, big_bet=self.big_bet)
        return create_state(
            variant,
            automations=self.automations(),
            # a single ante is posted by everyone
            antes=self.antes[0] if len(self.antes) == 1 else self.antes,
            blinds_or_straddles=self.blinds,
            bring_in=self.bring_in,
            starting_stacks=self.stacks,
            seed=self.seed if seed is None else seed,
            deck=self.deck,
        )

    def format(self) -> str:
        lines = [f"variant {self.variant}"]
        if self.antes:
            lines.append("antes " + " ".join(map(str, self.antes)))
        if self.blinds:
            lines.append("blinds " + " ".join(map(str, self.blinds)))
        if self.bring_in:
            lines.append(f"bring-in {self.bring_in}")
        if self.min_bet is not None:
            lines.append(f"min-bet {self.min_bet}")
        if self.big_bet is not None:
            lines.append(f"big-bet {self.big_bet}")
        lines.append("stacks " + " ".join(map(str, self.stacks)))
        if self.seed is not None:
            lines.append(f"seed {self.seed}")
        if self.deck is not None:
            lines.append(f"deck {self.deck}")
        lines.append(f"automation {self.automation}")
        lines.extend(map(str, self.actions))
        return "\n".join(lines) + "\n"


def parse_automation(text: str) -> frozenset[Automation]:
    text = text.strip().lower()
    if text in _PROFILES:
        return _PROFILES[text]
    try:
        return frozenset(Automation(part.strip()) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"unknown automation profile {text!r}") from None


def _amount(line: int, word: str) -> int:
    if not word.isdigit():
        raise ScriptError(line, f"expected a non-negative integer, got {word!r}")
    return int(word)


def _check_action(line: int, name: str, args: list[str]) -> None:
    if name not in ACTIONS:
        raise ScriptError(line, f"unknown action {name!r}")
    kinds = ACTIONS[name][1]
    required = sum(1 for k in kinds if not k.endswith("?"))
    if not required <= len(args) <= len(kinds):
        raise ScriptError(line, f"{name} takes {required}..{len(kinds)} arguments, got {len(args)}")
    for kind, arg in zip(kinds, args):
        kind = kind.rstrip("?")
        if kind in ("player", "amount"):
            _amount(line, arg)
        else:
            try:
                as_cards(arg)
            except ValueError as error:
                raise ScriptError(line, str(error)) from None


def parse_script(text: str) -> HandHistoryScript:
    header: dict[str, list[str]] = {}
    actions: list[Action] = []
    for number, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        key, args = words[0].lower(), words[1:]
        if key in HEADER_KEYS:
            if actions:
                raise ScriptError(number, f"header key {key!r} after the first action")
            if key in header:
                raise ScriptError(number, f"duplicate header key {key!r}")
            if not args:
                raise ScriptError(number, f"{key} needs a value")
            header[key] = args
            continue
        _check_action(number, key, args)
        actions.append(Action(key, tuple(args), number))

    for key in ("variant", "stacks"):
        if key not in header:
            raise ScriptError(0, f"missing header key {key!r}")
    if "seed" in header and "deck" in header:
        raise ScriptError(0, "give either a seed or a deck, not both")

    def ints(key):
        return tuple(_amount(0, w) for w in header.get(key, ()))

    def single(key):
        values = ints(key)
        if len(values) > 1:
            raise ScriptError(0, f"{key} takes one value")
        return values[0] if values else None

    automation = " ".join(header.get("automation", ["dealer"]))
    try:
        parse_automation(automation)
    except ValueError as error:
        raise ScriptError(0, str(error)) from None
    deck = None
    if "deck" in header:
        deck = "".join(header["deck"])
        try:
            as_cards(deck)
        except ValueError as error:
            raise ScriptError(0, str(error)) from None
    return HandHistoryScript(
        variant="-".join(header["variant"]),
        stacks=ints("stacks"),
        antes=ints("antes"),
        blinds=ints("blinds"),
        bring_in=single("bring-in") or 0,
        min_bet=single("min-bet"),
        big_bet=single("big-bet"),
        seed=single("seed"),
        deck=deck,
        automation=automation,
        actions=actions,
    )


def apply_action(state: GameState, action: Action) -> None:
    """Run one action; engine rule violations surface as ``ValueError``."""
    method, kinds = ACTIONS[action.name]
    args: list = []
    for kind, arg in zip(kinds, action.args):
        args.append(int(arg) if kind.rstrip("?") in ("player", "amount") else arg)
    if action.name == "show":
        args = [True]
    elif action.name == "muck":
        args = [False]
    getattr(state, method)(*args)


def action_from_operation(operation: Operation) -> Action:
    name, args = operation.name, operation.args
    if name == "post_ante":
        return Action("post-ante", (str(args[0]),))
    if name == "collect_bets":
        return Action("collect-bets")
    if name == "post_blind_or_straddle":
        return Action("post-blind", (str(args[0]),))
    if name == "burn_card":
        return Action("burn", (args[0],))
    if name == "deal_hole":
        return Action("deal-hole", (args[0], str(args[1])))
    if name == "deal_board":
        return Action("deal-board", (args[0],))
    if name == "stand_pat_or_discard":
        return Action("discard", (args[0],)) if args[0] else Action("stand-pat")
    if name == "fold":
        return Action("fold")
    if name == "check_or_call":
        return Action("check-call")
    if name == "post_bring_in":
        return Action("post-bring-in")
    if name == "complete_bet_or_raise_to":
        return Action("complete-bet-raise-to", (str(args[0]),))
    if name == "show_or_muck_hole_cards":
        return Action("show" if args[0] else "muck")
    if name == "kill_hand":
        return Action("kill-hand", (str(args[0]),))
    if name == "push_chips":
        return Action("push-chips")
    if name == "pull_chips":
        return Action("pull-chips", (str(args[0]),))
    raise ValueError(f"unknown operation {name!r}")


def script_from_state(script: HandHistoryScript, state: GameState) -> HandHistoryScript:
    """``script``'s header with the manual operations ``state`` actually ran,
    every argument spelled out."""
    actions = [action_from_operation(op) for op in state.operations if not op.automated]
    return HandHistoryScript(
        variant=script.variant,
        stacks=script.stacks,
        antes=script.antes,
        blinds=script.blinds,
        bring_in=script.bring_in,
        min_bet=script.min_bet,
        big_bet=script.big_bet,
        seed=state.seed,
        deck=script.deck,
        automation=script.automation,
        actions=actions,
    )


def replay(script: HandHistoryScript, seed: int | None = None) -> GameState:
    """Run every action; raises ``ReplayError`` naming the offending line."""
    try:
        state = script.create_state(seed)
    except ValueError as error:
        raise ReplayError(0, str(error)) from None
    for action in script.actions:
        try:
            apply_action(state, action)
        except ValueError as error:
            raise ReplayError(action.line, f"{action}: {error}") from None
    return state
