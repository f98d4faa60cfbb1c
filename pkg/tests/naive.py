"""Slow, obviously-correct hand categorizers used as test oracles.

Every function takes a list of ``(rank, suit)`` integer pairs (rank 2..14,
suit 0..3) and returns a tuple key: a larger key is a stronger hand under
that hand type's own sense. Nothing here touches the lookup tables.
"""

from collections import Counter
from itertools import combinations

HIGH_CATEGORIES = [
    "high card",
    "one pair",
    "two pair",
    "three of a kind",
    "straight",
    "flush",
    "full house",
    "four of a kind",
    "straight flush",
]

SHORT_DECK_CATEGORIES = [
    "high card",
    "one pair",
    "two pair",
    "three of a kind",
    "straight",
    "full house",
    "flush",
    "four of a kind",
    "straight flush",
]


def _grouped(ranks):
    """Ranks ordered by multiplicity then rank, both descending."""
    counts = Counter(ranks)
    return sorted(ranks, key=lambda r: (counts[r], r), reverse=True), sorted(
        counts.values(), reverse=True
    )


def _straight_top(ranks, lowest):
    distinct = sorted(set(ranks))
    if len(distinct) != 5:
        return None
    if distinct[-1] - distinct[0] == 4:
        return distinct[-1]
    # ace playing low: A + the four lowest ranks of the deck
    if distinct == [lowest, lowest + 1, lowest + 2, lowest + 3, 14]:
        return lowest + 3
    return None


def _pattern_category(shape):
    return {
        (1, 1, 1, 1, 1): "high card",
        (2, 1, 1, 1): "one pair",
        (2, 2, 1): "two pair",
        (3, 1, 1): "three of a kind",
        (3, 2): "full house",
        (4, 1): "four of a kind",
    }[tuple(shape)]


def high_key(cards, short_deck=False):
    ranks = [r for r, _ in cards]
    suits = {s for _, s in cards}
    order, shape = _grouped(ranks)
    flush = len(suits) == 1
    top = _straight_top(ranks, 6 if short_deck else 2)
    if top is not None and flush:
        category, tiebreak = "straight flush", [top]
    elif top is not None:
        category, tiebreak = "straight", [top]
    elif flush:
        category, tiebreak = "flush", order
    else:
        category, tiebreak = _pattern_category(shape), order
    table = SHORT_DECK_CATEGORIES if short_deck else HIGH_CATEGORIES
    return (table.index(category), *tiebreak)


def standard_low_key(cards):
    return tuple(-v for v in high_key(cards))


def regular_low_key(cards):
    ranks = [1 if r == 14 else r for r, _ in cards]
    order, shape = _grouped(ranks)
    category = [
        "high card",
        "one pair",
        "two pair",
        "three of a kind",
        "full house",
        "four of a kind",
    ].index(_pattern_category(shape))
    return tuple(-v for v in (category, *order))


def eight_or_better_key(cards):
    """None when the cards do not make a qualifying low."""
    ranks = [1 if r == 14 else r for r, _ in cards]
    if len(set(ranks)) != 5 or max(ranks) > 8:
        return None
    return tuple(-r for r in sorted(ranks, reverse=True))


def badugi_key(cards):
    best = None
    for size in range(len(cards), 0, -1):
        for subset in combinations(cards, size):
            if len({r for r, _ in subset}) != size:
                continue
            if len({s for _, s in subset}) != size:
                continue
            low = sorted((1 if r == 14 else r for r, _ in subset), reverse=True)
            key = (size, *(-r for r in low))
            if best is None or key > best:
                best = key
        if best is not None:
            return best
    return best


def kuhn_key(cards):
    (rank, _), = cards
    return (rank,)


def high_category(cards, short_deck=False):
    key = high_key(cards, short_deck)
    return (SHORT_DECK_CATEGORIES if short_deck else HIGH_CATEGORIES)[key[0]]


# hand type name -> (key function, cards taken from hole, from board);
# None means any cards of hole and board together
SELECTION = {
    "standard-high": (high_key, None, None),
    "standard-low": (standard_low_key, None, None),
    "greek-holdem": (high_key, 2, 3),
    "omaha-holdem": (high_key, 2, 3),
    "eight-or-better-low": (eight_or_better_key, None, None),
    "omaha-eight-or-better-low": (eight_or_better_key, 2, 3),
    "short-deck-holdem": (lambda cards: high_key(cards, short_deck=True), None, None),
    "regular-low": (regular_low_key, None, None),
    "omaha-regular-low": (regular_low_key, 2, 3),
    "badugi": (badugi_key, None, None),
    "kuhn-poker": (kuhn_key, None, None),
}


def brute_force_best(name, arity, hole, board):
    """Largest key over every selection the hand type allows, or None."""
    key, from_hole, from_board = SELECTION[name]
    if from_hole is None:
        selections = combinations(hole + board, arity)
    else:
        selections = (
            h + b for h in combinations(hole, from_hole) for b in combinations(board, from_board)
        )
    keys = [k for k in map(lambda s: key(list(s)), selections) if k is not None]
    return max(keys) if keys else None


# hand type name -> (short deck?, hole cards, board cards) of a typical game
SHAPES = {
    "standard-high": (False, 2, 5),
    "standard-low": (False, 5, 0),
    "greek-holdem": (False, 2, 5),
    "omaha-holdem": (False, 4, 5),
    "eight-or-better-low": (False, 7, 0),
    "omaha-eight-or-better-low": (False, 4, 5),
    "short-deck-holdem": (True, 2, 5),
    "regular-low": (False, 7, 0),
    "omaha-regular-low": (False, 4, 5),
    "badugi": (False, 4, 0),
    "kuhn-poker": (None, 1, 0),
}


def random_game(name, rng):
    """A random (hole, board) of ``(rank, suit)`` pairs shaped for ``name``."""
    short, hole, board = SHAPES[name]
    if short is None:
        deck = [(r, 3) for r in (11, 12, 13)]
    else:
        deck = [(r, s) for r in range(6 if short else 2, 15) for s in range(4)]
    cards = rng.sample(deck, hole + board)
    return cards[:hole], cards[hole:]
