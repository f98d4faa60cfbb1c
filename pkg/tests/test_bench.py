import random
from itertools import combinations
from math import comb

import numpy as np
import pytest

from pokersim.bench import _sweep7, best_of_seven_tables, sweep_exact
from pokersim.cards import create_deck, parse_cards
from pokersim.evaluation import PRIMES, LookupKind, _lookup_codes, get_lookup

SEVEN_CARD_KINDS = [
    LookupKind.STANDARD,
    LookupKind.SHORT_DECK,
    LookupKind.EIGHT_OR_BETTER,
    LookupKind.REGULAR,
]


def compiled_classes(lookup, cards):
    products, best, flush = best_of_seven_tables(lookup)
    primes = np.array([PRIMES[c.rank - 2] for c in cards], dtype=np.int64)
    bits = np.array([1 << (c.rank - 2) for c in cards], dtype=np.int64)
    suits = np.array([int(c.suit) for c in cards], dtype=np.int64)
    seen = np.zeros(lookup.class_count + 1, dtype=np.uint8)
    hands = _sweep7(primes, bits, suits, products, best, flush, seen)
    return hands, set(np.flatnonzero(seen).tolist())


def brute_force_classes(lookup, cards):
    seen = set()
    for seven in combinations([c.code for c in cards], 7):
        top = 0
        for five in combinations(seven, 5):
            identity = _lookup_codes(lookup, five)
            if identity is not None:
                top = max(top, identity.index)
        seen.add(top)
    return seen


@pytest.mark.parametrize("kind", SEVEN_CARD_KINDS)
@pytest.mark.parametrize("seed", range(3))
def test_compiled_sweep_matches_brute_force(kind, seed):
    lookup = get_lookup(kind)
    deck = create_deck(lookup.deck)
    rng = random.Random(seed)
    # lean on one suit so flushes show up
    spades = [c for c in deck if c.suit == 3]
    cards = rng.sample(spades, 6) + rng.sample([c for c in deck if c.suit != 3], 7)
    hands, seen = compiled_classes(lookup, cards)
    assert hands == comb(len(cards), 7)
    assert seen == brute_force_classes(lookup, cards)


def test_tables_pick_flush_over_pair():
    lookup = get_lookup(LookupKind.STANDARD)
    cards = parse_cards("AsKsQs9s2sAdAh")
    _, seen = compiled_classes(lookup, cards)
    assert seen == {_lookup_codes(lookup, [c.code for c in parse_cards("AsKsQs9s2s")]).index}


def test_tables_reject_non_five_card_lookups():
    with pytest.raises(ValueError):
        best_of_seven_tables(get_lookup(LookupKind.BADUGI))


@pytest.mark.parametrize("kind, classes", [(LookupKind.KUHN, 3), (LookupKind.BADUGI, 1092)])
def test_exact_sweep_small_decks(kind, classes):
    result = sweep_exact(get_lookup(kind))
    assert result.classes == classes
    assert result.rate > 0
