"""Random legal-action driver shared by the engine fuzz tests."""

import random
from collections import Counter

from pokersim.cards import create_deck
from pokersim.engine import ALL_AUTOMATIONS, Automation, Phase, create_state
from pokersim.variants import builtin_variant

FAMILIES = {
    "texas-holdem": dict(blinds_or_straddles=(1, 2)),
    "omaha-holdem-hl8": dict(blinds_or_straddles=(1, 2)),
    "7-card-stud": dict(antes=1, bring_in=1),
    "razz": dict(antes=1, bring_in=1),
    "5-card-draw": dict(antes=1, blinds_or_straddles=(1, 2)),
    "2-to-7-triple-draw": dict(blinds_or_straddles=(1, 2)),
    "badugi": dict(blinds_or_straddles=(1, 2)),
    "kuhn-poker": dict(antes=1),
}


def random_state(family, rng, automations=ALL_AUTOMATIONS):
    small = 1 if family == "kuhn-poker" else 2
    variant = builtin_variant(family, small_bet=small)
    high = min(variant.max_players, 6)
    players = rng.randint(2, high)
    stacks = [rng.choice([1, 2, 3, 5, 10, 40, 200]) for _ in range(players)]
    return create_state(
        variant,
        automations=automations,
        starting_stacks=stacks,
        seed=rng.randrange(2**32),
        **FAMILIES[family],
    )


def partition_ok(state):
    seen = Counter(state.deck_cards)
    seen.update(state.board_cards)
    seen.update(state.mucked_cards)
    seen.update(state.burned_cards)
    for hole in state.hole_cards:
        seen.update(hole)
    return seen == Counter(create_deck(state.variant.deck))


def chips(state):
    return sum(state.stacks) + sum(state.bets) + state.total_pot_amount


def candidate_moves(state, rng):
    """Operations (name, args) worth trying from ``state``; some may be illegal."""
    moves = [
        ("post_ante", ()),
        ("collect_bets", ()),
        ("post_blind_or_straddle", ()),
        ("burn_card", ()),
        ("deal_hole", ()),
        ("deal_board", ()),
        ("fold", ()),
        ("check_or_call", ()),
        ("post_bring_in", ()),
        ("show_or_muck_hole_cards", (True,)),
        ("show_or_muck_hole_cards", (False,)),
        ("show_or_muck_hole_cards", (None,)),
        ("kill_hand", ()),
        ("push_chips", ()),
        ("pull_chips", ()),
    ]
    low = state.min_completion_betting_or_raising_to
    high = state.max_completion_betting_or_raising_to
    if low is not None:
        moves.append(("complete_bet_or_raise_to", (rng.randint(low, high),)))
        moves.append(("complete_bet_or_raise_to", (low - 1,)))
    moves.append(("complete_bet_or_raise_to", (rng.randint(0, 500),)))
    actor = state.actor_index
    if actor is not None and state.phase is Phase.DEALING:
        hole = list(state.hole_cards[actor])
        moves.append(("stand_pat_or_discard", (rng.sample(hole, rng.randint(0, len(hole))),)))
    moves.append(("stand_pat_or_discard", ((),)))
    return moves


def play(state, rng, check=None, limit=10_000):
    """Apply random legal operations until terminal; ``check`` runs after each."""
    for _ in range(limit):
        if state.phase is Phase.TERMINAL:
            return state
        legal = [
            (name, args)
            for name, args in candidate_moves(state, rng)
            if getattr(state, "can_" + name)(*args)
        ]
        assert legal, f"stuck in {state.phase}"
        # fold less often so hands reach showdown
        weights = [0.3 if name == "fold" else 1.0 for name, _ in legal]
        name, args = rng.choices(legal, weights)[0]
        getattr(state, name)(*args)
        if check is not None:
            check(state)
    raise AssertionError("hand did not terminate")
