from dataclasses import replace

import pytest

from pokersim.cards import DeckKind
from pokersim.evaluation import LookupKind
from pokersim.variants import (
    BUILTIN_NAMES,
    BettingStructure,
    OpenerRule,
    builtin_variant,
    validate_definition,
)


def test_catalog_has_every_supported_variant():
    assert len(BUILTIN_NAMES) == 27


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_validate(name):
    definition = builtin_variant(name)
    assert validate_definition(definition) == []
    assert definition.card_budget(definition.max_players) <= definition.deck.size


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_split_games_have_two_hand_types(name):
    count = len(builtin_variant(name).hand_types)
    assert count == (2 if name.endswith(("-hl8", "-hlr")) else 1)


def test_texas_holdem():
    texas = builtin_variant("no-limit texas holdem")
    assert texas.name == "no-limit-texas-holdem"
    assert texas.betting_structure is BettingStructure.NO_LIMIT
    assert [s.hole_counts for s in texas.streets] == [(2, 0), (0, 0), (0, 0), (0, 0)]
    assert [s.board_deal for s in texas.streets] == [0, 3, 1, 1]
    assert [s.burn for s in texas.streets] == [False, True, True, True]
    (high,) = texas.hand_types
    assert high.lookup_kind is LookupKind.STANDARD
    assert high.hole_used is None


def test_razz():
    razz = builtin_variant("razz")
    assert razz.betting_structure is BettingStructure.FIXED_LIMIT
    assert [s.hole_deal for s in razz.streets] == [
        (False, False, True), (True,), (True,), (True,), (False,),
    ]
    assert razz.streets[0].opener is OpenerRule.BRING_IN
    assert razz.hand_types[0].lookup_kind is LookupKind.REGULAR


def test_kuhn():
    kuhn = builtin_variant("kuhn poker")
    assert kuhn.deck is DeckKind.KUHN
    assert len(kuhn.streets) == 1
    assert kuhn.streets[0].hole_counts == (1, 0)
    assert kuhn.streets[0].min_bet == 1
    assert kuhn.betting_structure is BettingStructure.FIXED_LIMIT
    assert kuhn.max_players == 2


def test_kuhn_bet_is_configurable():
    assert builtin_variant("kuhn-poker", small_bet=3).streets[0].min_bet == 3


def test_fixed_limit_bet_sizes():
    stud = builtin_variant("7-card-stud", small_bet=2)
    assert [s.min_bet for s in stud.streets] == [2, 2, 4, 4, 4]
    assert all(s.max_raises == 4 for s in stud.streets)


def test_structure_prefix_overrides():
    assert builtin_variant("pot-limit-texas-holdem").betting_structure is BettingStructure.POT_LIMIT


def test_unknown_variant():
    with pytest.raises(ValueError):
        builtin_variant("pineapple")


@pytest.mark.parametrize(
    "name, players",
    [
        ("texas-holdem", 22),
        ("omaha-holdem", 11),
        ("7-card-stud", 6),
        ("5-card-draw", 10),
        ("badugi", 12),
        ("kuhn-poker", 2),
    ],
)
def test_max_players_from_card_budget(name, players):
    assert builtin_variant(name).max_players == players


def test_empty_streets_violation():
    definition = replace(builtin_variant("texas-holdem"), streets=())
    assert "empty streets" in validate_definition(definition)


def test_deck_exhaustion_violation():
    # 10 players x 5 hole + 5 board + 3 burns = 58 > 52
    definition = replace(builtin_variant("5-card-omaha-holdem"), max_players=10)
    assert definition.card_budget(10) == 58
    problems = validate_definition(definition)
    assert any(p.startswith("deck exhaustion possible") for p in problems)


def test_violations_are_all_reported():
    bad = builtin_variant("texas-holdem")
    street = replace(bad.streets[0], min_bet=0)
    bad = replace(bad, streets=(street, *bad.streets[1:]), hand_types=(), max_players=30)
    problems = validate_definition(bad)
    assert len(problems) >= 3


def test_bring_in_only_on_first_street():
    stud = builtin_variant("razz")
    streets = list(stud.streets)
    streets[1] = replace(streets[1], opener=OpenerRule.BRING_IN)
    assert validate_definition(replace(stud, streets=tuple(streets)))
