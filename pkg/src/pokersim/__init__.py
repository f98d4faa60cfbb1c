"""Poker game simulation and hand evaluation."""

from .cards import Card, DeckKind, Rank, Suit, create_deck, format_cards, parse_cards, shuffle_deck
from .engine import (
    ALL_AUTOMATIONS,
    DEALER_AUTOMATIONS,
    NO_AUTOMATIONS,
    Automation,
    GameState,
    Phase,
    PlayerStatus,
    Pot,
    create_state,
    side_pots,
)
from .evaluation import (
    HAND_TYPES,
    Hand,
    HandIdentity,
    HandTypeSpec,
    Lookup,
    LookupKind,
    build_lookup,
    compare_hands,
    dump_ordered_hands,
    evaluate,
    get_lookup,
    hand_from_cards,
    hand_from_game,
    hand_type,
)
from .variants import (
    BUILTIN_NAMES,
    BettingStructure,
    OpenerRule,
    Street,
    VariantDefinition,
    builtin_variant,
    validate_definition,
)

__all__ = [
    "ALL_AUTOMATIONS", "BUILTIN_NAMES", "DEALER_AUTOMATIONS", "HAND_TYPES", "NO_AUTOMATIONS",
    "Automation", "BettingStructure", "Card", "DeckKind", "GameState", "Hand", "HandIdentity",
    "HandTypeSpec", "Lookup", "LookupKind", "OpenerRule", "Phase", "PlayerStatus", "Pot", "Rank",
    "Street", "Suit", "VariantDefinition", "build_lookup", "builtin_variant", "compare_hands",
    "create_deck", "create_state", "dump_ordered_hands", "evaluate", "format_cards", "get_lookup",
    "hand_from_cards", "hand_from_game", "hand_type", "parse_cards", "shuffle_deck", "side_pots",
    "validate_definition",
]
