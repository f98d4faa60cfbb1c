"""Variant definitions and the built-in catalog."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, replace
from enum import Enum

from . import evaluation as ev
from .cards import DeckKind, create_deck


class BettingStructure(Enum):
    NO_LIMIT = "no-limit"
    POT_LIMIT = "pot-limit"
    FIXED_LIMIT = "fixed-limit"


class OpenerRule(Enum):
    POSITION_AFTER_BLINDS = "position-after-blinds"
    BRING_IN = "bring-in"
    BEST_EXPOSED = "best-exposed-hand"
    FIRST_AFTER_BUTTON = "first-active-after-button"


@dataclass(frozen=True)
class Street:
    """One dealing-plus-betting round.

    ``hole_deal`` holds one face-up flag per card dealt to each player, in
    dealing order, e.g. ``(False, False, True)`` for stud third street.
    ``min_bet`` is the bet size in fixed-limit games. ``max_raises`` caps
    completions, bets and raises on the street (``None`` = unbounded).
    """

    burn: bool
    hole_deal: tuple[bool, ...]
    board_deal: int
    draw: bool
    opener: OpenerRule
    min_bet: int
    max_raises: int | None = None

    @property
    def hole_counts(self) -> tuple[int, int]:
        """(face-down, face-up) cards dealt to each player."""
        up = sum(self.hole_deal)
        return len(self.hole_deal) - up, up


@dataclass(frozen=True)
class VariantDefinition:
    name: str
    deck: DeckKind
    hand_types: tuple[ev.HandTypeSpec, ...]
    streets: tuple[Street, ...]
    betting_structure: BettingStructure
    max_players: int = 0
    min_players: int = 2

    @property
    def uses_bring_in(self) -> bool:
        return bool(self.streets) and self.streets[0].opener is OpenerRule.BRING_IN

    @property
    def is_split(self) -> bool:
        return len(self.hand_types) == 2

    def card_budget(self, players: int) -> int:
        """Cards needed at most: hole cards, board cards and burns."""
        hole = sum(len(s.hole_deal) for s in self.streets)
        board = sum(s.board_deal for s in self.streets)
        burns = sum(s.burn for s in self.streets)
        return players * hole + board + burns

    def with_max_players(self) -> VariantDefinition:
        """Copy whose ``max_players`` is the largest count the deck supports."""
        size = self.deck.size
        n = self.min_players
        while self.card_budget(n + 1) <= size:
            n += 1
        return replace(self, max_players=n)


def validate_definition(definition: VariantDefinition) -> list[str]:
    """Every rule the definition breaks; an empty list means valid."""
    problems = []
    if not definition.streets:
        problems.append("empty streets")
    if len(definition.hand_types) not in (1, 2):
        problems.append(f"expected 1 or 2 hand types, got {len(definition.hand_types)}")
    if definition.is_split:
        low = definition.hand_types[1]
        if low.lookup_kind not in (ev.LookupKind.EIGHT_OR_BETTER, ev.LookupKind.REGULAR):
            problems.append("split definition must name an eight-or-better or regular low")
    for i, street in enumerate(definition.streets):
        if street.min_bet <= 0:
            problems.append(f"street {i}: min bet must be positive")
        if street.max_raises is not None and street.max_raises < 0:
            problems.append(f"street {i}: negative raise cap")
        if street.board_deal < 0:
            problems.append(f"street {i}: negative board count")
        if i and street.opener is OpenerRule.BRING_IN:
            problems.append(f"street {i}: bring-in opener only allowed on the first street")
        if street.draw and not any(s.hole_deal for s in definition.streets[:i]):
            problems.append(f"street {i}: draw before any hole cards")
    if definition.streets and not definition.streets[0].hole_deal:
        problems.append("first street deals no hole cards")
    if definition.min_players < 2:
        problems.append("fewer than two players")
    if definition.max_players < definition.min_players:
        problems.append("max players below min players")
    elif definition.card_budget(definition.max_players) > definition.deck.size:
        problems.append(
            "deck exhaustion possible: "
            f"{definition.card_budget(definition.max_players)} cards needed for"
            f" {definition.max_players} players, deck holds {definition.deck.size}"
        )
    hole = sum(len(s.hole_deal) for s in definition.streets)
    board = sum(s.board_deal for s in definition.streets)
    for hand_type in definition.hand_types:
        if not hand_type.can_select(hole, board):
            problems.append(
                f"{hand_type.name} needs more cards than {hole} hole + {board} board"
            )
        if not hand_type.lookup._members.issuperset(create_deck(definition.deck)):
            problems.append(f"{hand_type.name} is not playable with a {definition.deck.value} deck")
    return problems


# --- catalog ----------------------------------------------------------------

_CAP = 4


def _holdem_streets(hole: int, small: int, big: int, *, courchevel: bool = False):
    pos, btn = OpenerRule.POSITION_AFTER_BLINDS, OpenerRule.FIRST_AFTER_BUTTON
    down = (False,) * hole
    if courchevel:
        return (
            Street(False, down, 1, False, pos, small, _CAP),
            Street(True, (), 2, False, btn, small, _CAP),
            Street(True, (), 1, False, btn, big, _CAP),
            Street(True, (), 1, False, btn, big, _CAP),
        )
    return (
        Street(False, down, 0, False, pos, small, _CAP),
        Street(True, (), 3, False, btn, small, _CAP),
        Street(True, (), 1, False, btn, big, _CAP),
        Street(True, (), 1, False, btn, big, _CAP),
    )


def _stud_streets(cards: int, small: int, big: int):
    exposed = OpenerRule.BEST_EXPOSED
    if cards == 7:
        return (
            Street(False, (False, False, True), 0, False, OpenerRule.BRING_IN, small, _CAP),
            Street(True, (True,), 0, False, exposed, small, _CAP),
            Street(True, (True,), 0, False, exposed, big, _CAP),
            Street(True, (True,), 0, False, exposed, big, _CAP),
            Street(True, (False,), 0, False, exposed, big, _CAP),
        )
    return (
        Street(False, (False, True), 0, False, OpenerRule.BRING_IN, small, _CAP),
        Street(True, (True,), 0, False, exposed, small, _CAP),
        Street(True, (True,), 0, False, exposed, big, _CAP),
        Street(True, (True,), 0, False, exposed, big, _CAP),
    )


def _draw_streets(cards: int, draws: int, small: int, big: int):
    streets = [
        Street(False, (False,) * cards, 0, False, OpenerRule.POSITION_AFTER_BLINDS, small, _CAP)
    ]
    for i in range(draws):
        # the later half of the draws play at the big bet
        size = big if i >= draws // 2 else small
        streets.append(Street(True, (), 0, True, OpenerRule.FIRST_AFTER_BUTTON, size, _CAP))
    return tuple(streets)


@dataclass(frozen=True)
class _Entry:
    structure: BettingStructure
    deck: DeckKind
    hand_types: tuple[ev.HandTypeSpec, ...]
    streets: Callable[[int, int], tuple[Street, ...]]
    max_players: int | None = None
    default_bet: int = 2


NL, PL, FL = BettingStructure.NO_LIMIT, BettingStructure.POT_LIMIT, BettingStructure.FIXED_LIMIT
STD, SHORT = DeckKind.STANDARD, DeckKind.SHORT_DECK
HIGH_LOW_8 = (ev.STANDARD_HIGH, ev.EIGHT_OR_BETTER_LOW)
HIGH_LOW_R = (ev.STANDARD_HIGH, ev.REGULAR_LOW)
OMAHA_8 = (ev.OMAHA_HOLDEM, ev.OMAHA_EIGHT_OR_BETTER_LOW)
OMAHA_R = (ev.OMAHA_HOLDEM, ev.OMAHA_REGULAR_LOW)


def _omaha(hole: int, types, courchevel: bool = False) -> _Entry:
    return _Entry(PL, STD, types, lambda s, b: _holdem_streets(hole, s, b, courchevel=courchevel))


_CATALOG: dict[str, _Entry] = {
    "texas-holdem": _Entry(NL, STD, (ev.STANDARD_HIGH,), lambda s, b: _holdem_streets(2, s, b)),
    "omaha-holdem": _omaha(4, (ev.OMAHA_HOLDEM,)),
    "omaha-holdem-hl8": _omaha(4, OMAHA_8),
    "omaha-holdem-hlr": _omaha(4, OMAHA_R),
    "5-card-omaha-holdem": _omaha(5, (ev.OMAHA_HOLDEM,)),
    "5-card-omaha-holdem-hl8": _omaha(5, OMAHA_8),
    "5-card-omaha-holdem-hlr": _omaha(5, OMAHA_R),
    "6-card-omaha-holdem": _omaha(6, (ev.OMAHA_HOLDEM,)),
    "6-card-omaha-holdem-hl8": _omaha(6, OMAHA_8),
    "6-card-omaha-holdem-hlr": _omaha(6, OMAHA_R),
    "short-deck-holdem": _Entry(
        NL, SHORT, (ev.SHORT_DECK_HOLDEM,), lambda s, b: _holdem_streets(2, s, b)
    ),
    "courchevel": _omaha(5, (ev.OMAHA_HOLDEM,), True),
    "courchevel-hl8": _omaha(5, OMAHA_8, True),
    "courchevel-hlr": _omaha(5, OMAHA_R, True),
    "7-card-stud": _Entry(FL, STD, (ev.STANDARD_HIGH,), lambda s, b: _stud_streets(7, s, b)),
    "7-card-stud-hl8": _Entry(FL, STD, HIGH_LOW_8, lambda s, b: _stud_streets(7, s, b)),
    "7-card-stud-hlr": _Entry(FL, STD, HIGH_LOW_R, lambda s, b: _stud_streets(7, s, b)),
    "razz": _Entry(FL, STD, (ev.REGULAR_LOW,), lambda s, b: _stud_streets(7, s, b)),
    "5-card-draw": _Entry(FL, STD, (ev.STANDARD_HIGH,), lambda s, b: _draw_streets(5, 1, s, b)),
    "2-to-7-triple-draw": _Entry(
        FL, STD, (ev.STANDARD_LOW,), lambda s, b: _draw_streets(5, 3, s, b)
    ),
    "2-to-7-single-draw": _Entry(
        NL, STD, (ev.STANDARD_LOW,), lambda s, b: _draw_streets(5, 1, s, b)
    ),
    "badugi": _Entry(FL, STD, (ev.BADUGI,), lambda s, b: _draw_streets(4, 3, s, b)),
    "greek-holdem": _Entry(PL, STD, (ev.GREEK_HOLDEM,), lambda s, b: _holdem_streets(2, s, b)),
    "kuhn-poker": _Entry(
        FL,
        DeckKind.KUHN,
        (ev.KUHN_POKER,),
        lambda s, b: (
            Street(False, (False,), 0, False, OpenerRule.FIRST_AFTER_BUTTON, s, 1),
        ),
        max_players=2,
        default_bet=1,
    ),
    "5-card-stud": _Entry(FL, STD, (ev.STANDARD_HIGH,), lambda s, b: _stud_streets(5, s, b)),
    "5-card-stud-hl8": _Entry(FL, STD, HIGH_LOW_8, lambda s, b: _stud_streets(5, s, b)),
    "5-card-stud-hlr": _Entry(FL, STD, HIGH_LOW_R, lambda s, b: _stud_streets(5, s, b)),
}

BUILTIN_NAMES = tuple(_CATALOG)

_PREFIXES = {s.value + "-": s for s in BettingStructure}


def normalize_name(name: str) -> str:
    return "-".join(name.strip().lower().replace("_", " ").replace("'", "").split())


def builtin_variant(
    name: str,
    *,
    small_bet: int | None = None,
    big_bet: int | None = None,
) -> VariantDefinition:
    """Look up a built-in variant.

    ``name`` is a catalog name (see ``BUILTIN_NAMES``), optionally prefixed
    with a betting structure, e.g. ``"no-limit-texas-holdem"`` or
    ``"fixed-limit-razz"``. Spaces are accepted in place of hyphens.
    ``small_bet`` sets the minimum bet (and the early-street limit in fixed
    limit); ``big_bet`` the later-street limit, twice the small bet unless
    given.
    """
    key = normalize_name(name)
    structure = None
    for prefix, candidate in _PREFIXES.items():
        if key.startswith(prefix):
            key, structure = key[len(prefix):], candidate
            break
    try:
        entry = _CATALOG[key]
    except KeyError:
        raise ValueError(f"unknown variant {name!r}") from None
    structure = structure or entry.structure
    small = entry.default_bet if small_bet is None else small_bet
    if structure is not BettingStructure.FIXED_LIMIT:
        big = small
    else:
        big = 2 * small if big_bet is None else big_bet
    definition = VariantDefinition(
        f"{structure.value}-{key}",
        entry.deck,
        entry.hand_types,
        entry.streets(small, big),
        structure,
    )
    definition = definition.with_max_players()
    if entry.max_players is not None:
        definition = replace(definition, max_players=entry.max_players)
    problems = validate_definition(definition)
    if problems:
        raise ValueError(f"invalid built-in {key}: {problems}")
    return definition
