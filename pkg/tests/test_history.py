import random
from pathlib import Path

import pytest

from policy import FAMILIES, play, random_state
from pokersim.engine import ALL_AUTOMATIONS, DEALER_AUTOMATIONS, Automation
from pokersim.history import (
    Action,
    ReplayError,
    ScriptError,
    parse_automation,
    parse_script,
    replay,
    script_from_state,
)

BIG_POT = Path(__file__).resolve().parent.parent / "scripts" / "million-dollar-pot.txt"

FOLD_TO_BIG_BLIND = """\
variant no-limit-texas-holdem
blinds 1 2
min-bet 2
stacks 100 100 100
automation all
fold
fold
"""


def test_big_pot_script():
    state = replay(parse_script(BIG_POT.read_text()))
    assert state.stacks == (572100, 1997500, 1109500)
    assert state.pot_history == (1500, 49500, 119500, 1681600)


def test_fold_to_big_blind():
    state = replay(parse_script(FOLD_TO_BIG_BLIND))
    assert state.stacks == (99, 101, 100)


def test_single_ante_applies_to_everyone():
    script = parse_script(BIG_POT.read_text())
    assert script.antes == (500,)
    assert script.create_state().bets == (1000, 2000, 0)
    assert script.create_state().pots[0].amount == 1500


def test_comments_and_blank_lines():
    script = parse_script("# note\n\nvariant texas holdem  # trailing\nstacks 5 5\nblinds 1 2\n")
    assert script.variant == "texas-holdem"
    assert script.actions == []


@pytest.mark.parametrize(
    "text, line",
    [
        ("stacks 1 2\n", 0),  # no variant
        ("variant texas-holdem\n", 0),  # no stacks
        ("variant texas-holdem\nstacks 5 5\nshuffle\n", 3),
        ("variant texas-holdem\nstacks 5 5\ncomplete-bet-raise-to ten\n", 3),
        ("variant texas-holdem\nstacks 5 5\nfold\nblinds 1 2\n", 4),
        ("variant texas-holdem\nvariant razz\nstacks 5 5\n", 2),
        ("variant texas-holdem\nstacks 5 5\nseed 1\ndeck AcKd\n", 0),
        ("variant texas-holdem\nstacks 5 5\nautomation sometimes\n", 0),
        ("variant texas-holdem\nstacks 5 5\ndeal-hole Zz\n", 3),
        ("variant texas-holdem\nstacks 5 5\nfold 1\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ScriptError) as info:
        parse_script(text)
    assert not isinstance(info.value, ReplayError)
    assert info.value.line == line


def test_replay_error_names_the_line():
    text = BIG_POT.read_text().replace("complete-bet-raise-to 23000", "complete-bet-raise-to 8000")
    with pytest.raises(ReplayError) as info:
        replay(parse_script(text))
    assert info.value.line == 13
    assert "8000" in str(info.value)


def test_setup_error_is_a_replay_error():
    with pytest.raises(ReplayError):
        replay(parse_script("variant texas-holdem\nstacks 5 5\n"))


def test_automation_profiles():
    assert parse_automation("dealer") == DEALER_AUTOMATIONS
    assert parse_automation("ALL") == ALL_AUTOMATIONS
    assert parse_automation("none") == frozenset()
    assert parse_automation("ante-posting, bet-collection") == {
        Automation.ANTE_POSTING, Automation.BET_COLLECTION,
    }


def test_action_text():
    assert str(Action("complete-bet-raise-to", ("300",))) == "complete-bet-raise-to 300"


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("profile", ["dealer", "none"])
def test_round_trip(family, profile):
    rng = random.Random(f"{family}{profile}")
    automations = parse_automation(profile)
    for _ in range(10):
        state = random_state(family, rng, automations)
        play(state, rng)
        header = _header_for(state, family, profile)
        script = script_from_state(header, state)
        again = replay(parse_script(script.format()))
        assert again == state


def _header_for(state, family, profile):
    from pokersim.history import HandHistoryScript

    variant = state.variant
    first = variant.streets[0]
    return HandHistoryScript(
        variant=variant.name,
        stacks=state.starting_stacks,
        antes=tuple(state.antes),
        blinds=tuple(state.blinds_or_straddles),
        bring_in=state.bring_in,
        min_bet=first.min_bet,
        big_bet=variant.streets[-1].min_bet,
        automation=profile,
    )
