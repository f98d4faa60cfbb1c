"""Lookup-table hand evaluation.

Every hand type is backed by one of six lookup tables. A table maps a hash key
built from the card ranks (the product of one prime per rank) and whether all
cards share a suit to a :class:`HandIdentity`. Identities carry a strength
index; within a table a greater index is always the stronger hand, so low
games are reversed while the table is built and compare like high games.
"""

from __future__ import annotations

import functools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations

from .cards import Card, DeckKind, Rank, as_cards, create_deck

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# indexed by Card.code
_CARD_PRIMES = tuple(PRIMES[code // 4] for code in range(52))


def rank_prime(rank: Rank) -> int:
    """The prime standing for ``rank``: deuce is 2, trey 3, ... ace 41."""
    return PRIMES[rank - 2]


def prime_product(cards: Iterable[Card]) -> int:
    product = 1
    count = 0
    for card in cards:
        product *= _CARD_PRIMES[card.code]
        count += 1
    if not count:
        raise ValueError("prime product of no cards")
    return product


class LookupKind(Enum):
    STANDARD = "standard"
    EIGHT_OR_BETTER = "eight-or-better"
    SHORT_DECK = "short-deck"
    REGULAR = "regular"
    BADUGI = "badugi"
    KUHN = "kuhn"


@dataclass(frozen=True)
class HandIdentity:
    """One lookup entry.

    ``ranks`` lists the evaluated ranks in order of significance (for low
    hands the highest card comes first) and ``suited`` records the suitedness
    half of the hash key.
    """

    index: int
    category: str
    ranks: tuple[Rank, ...]
    suited: bool

    @property
    def cards(self) -> str:
        """A concrete card string that evaluates back to this identity."""
        distinct = len(set(self.ranks)) == len(self.ranks)
        if self.category.startswith("badugi"):
            # pad with copies of the top rank so the hand has four cards
            # without making a bigger badugi
            chars = [r.char + s for r, s in zip(self.ranks, "shdc")]
            chars += [self.ranks[0].char + s for s in "hdc"[: 4 - len(chars)]]
            return "".join(chars)
        used: dict[Rank, int] = {}
        chars = []
        for rank in self.ranks:
            n = used.get(rank, 0)
            used[rank] = n + 1
            chars.append(rank.char + "shdc"[n])
        if distinct and len(chars) > 1 and not self.suited:
            chars[-1] = chars[-1][0] + "h"
        return "".join(chars)

    def describe(self) -> str:
        return f"{self.category} {self.cards}"


def _key(product: int, suited: bool) -> int:
    return product << 1 | suited


@dataclass(frozen=True, eq=False)
class Lookup:
    kind: LookupKind
    arity: int
    deck: DeckKind
    # weakest to strongest
    identities: tuple[HandIdentity, ...]
    _entries: dict[int, HandIdentity] = field(repr=False)
    _members: frozenset[Card] = field(repr=False)

    def __len__(self) -> int:
        return len(self.identities)

    @property
    def class_count(self) -> int:
        """Number of distinct strength indices (suited/unsuited twins share one)."""
        return self.identities[-1].index if self.identities else 0

    @property
    def uses_suitedness(self) -> bool:
        return self.kind not in (LookupKind.BADUGI, LookupKind.KUHN)

    def get(self, product: int, suited: bool) -> HandIdentity | None:
        return self._entries.get(_key(product, suited))

    def evaluate(self, cards: str | Iterable[Card]) -> HandIdentity:
        return evaluate(self, cards)


# --- table construction ---------------------------------------------------

def _low_value(rank: Rank) -> int:
    return 1 if rank == Rank.ACE else int(rank)


def _shaped(ranks: Sequence[Rank], shape: tuple[int, ...]) -> list[tuple[Rank, ...]]:
    """Every way to assign distinct ranks to the groups of ``shape``.

    ``shape`` holds group sizes in non-increasing order, e.g. ``(2, 1, 1, 1)``
    for one pair. Results are expanded rank tuples in significance order
    (larger groups first, then higher rank first), unsorted.
    """
    out = []
    for chosen in permutations(ranks, len(shape)):
        ok = all(
            shape[i] != shape[i + 1] or chosen[i] > chosen[i + 1]
            for i in range(len(shape) - 1)
        )
        if ok:
            out.append(tuple(r for r, n in zip(chosen, shape) for _ in range(n)))
    return out


def _straights(ranks: Sequence[Rank]) -> list[tuple[Rank, ...]]:
    """Five-rank runs over ``ranks`` (ascending), ace also playing low, weakest first."""
    ordered = sorted(ranks)
    runs = [tuple(reversed(ordered[:4])) + (Rank.ACE,)]
    for i in range(len(ordered) - 4):
        runs.append(tuple(reversed(ordered[i:i + 5])))
    return runs


def _high_classes(ranks: Sequence[Rank], flush_over_full_house: bool):
    """(category, ranks, suited flags) weakest first, for high-hand tables."""
    def high(shape):
        return sorted(_shaped(ranks, shape))

    straights = _straights(ranks)
    straight_sets = {frozenset(s) for s in straights}
    no_run = [h for h in high((1, 1, 1, 1, 1)) if frozenset(h) not in straight_sets]

    blocks = [
        ("high card", no_run, False),
        ("one pair", high((2, 1, 1, 1)), False),
        ("two pair", high((2, 2, 1)), False),
        ("three of a kind", high((3, 1, 1)), False),
        ("straight", straights, False),
    ]
    full_house = ("full house", high((3, 2)), False)
    flush = ("flush", no_run, True)
    blocks += [full_house, flush] if flush_over_full_house else [flush, full_house]
    blocks += [
        ("four of a kind", high((4, 1)), False),
        ("straight flush", straights, True),
    ]
    for category, hands, suited in blocks:
        for hand in hands:
            yield category, hand, (suited,)


def _regular_classes():
    """Ace-to-five lowball ignoring straights and flushes, weakest first."""
    ranks = list(Rank)
    blocks = [
        ("four of a kind", (4, 1)),
        ("full house", (3, 2)),
        ("three of a kind", (3, 1, 1)),
        ("two pair", (2, 2, 1)),
        ("one pair", (2, 1, 1, 1)),
        ("high card", (1, 1, 1, 1, 1)),
    ]
    for category, shape in blocks:
        hands = [
            tuple(sorted(h, key=lambda r: (h.count(r), _low_value(r)), reverse=True))
            for h in _shaped(ranks, shape)
        ]
        hands = list(dict.fromkeys(hands))
        hands.sort(key=lambda h: [_low_value(r) for r in h], reverse=True)
        for hand in hands:
            yield category, hand, (False, True) if shape[0] == 1 else (False,)


def _descending_low(subset) -> tuple[Rank, ...]:
    return tuple(sorted(subset, key=_low_value, reverse=True))


def _eight_or_better_classes():
    eligible = [Rank.ACE] + [r for r in Rank if r <= Rank.EIGHT]
    hands = [_descending_low(c) for c in combinations(eligible, 5)]
    hands.sort(key=lambda h: [_low_value(r) for r in h], reverse=True)
    for hand in hands:
        yield "qualified low", hand, (False, True)


def _badugi_classes():
    for size in range(1, 5):
        hands = [_descending_low(c) for c in combinations(list(Rank), size)]
        hands.sort(key=lambda h: [_low_value(r) for r in h], reverse=True)
        for hand in hands:
            yield f"badugi-{size}", hand, (False,)


def _kuhn_classes():
    for rank in (Rank.JACK, Rank.QUEEN, Rank.KING):
        yield "high card", (rank,), (False,)


_BUILDERS = {
    LookupKind.STANDARD: (5, DeckKind.STANDARD, lambda: _high_classes(list(Rank), False)),
    LookupKind.SHORT_DECK: (
        5,
        DeckKind.SHORT_DECK,
        lambda: _high_classes([r for r in Rank if r >= Rank.SIX], True),
    ),
    LookupKind.REGULAR: (5, DeckKind.STANDARD, _regular_classes),
    LookupKind.EIGHT_OR_BETTER: (5, DeckKind.STANDARD, _eight_or_better_classes),
    LookupKind.BADUGI: (4, DeckKind.STANDARD, _badugi_classes),
    LookupKind.KUHN: (1, DeckKind.KUHN, _kuhn_classes),
}


def build_lookup(kind: LookupKind) -> Lookup:
    """Enumerate every hand class of ``kind`` weakest first and index it from 1."""
    arity, deck, classes = _BUILDERS[kind]
    identities = []
    entries = {}
    for index, (category, ranks, suitednesses) in enumerate(classes(), 1):
        product = 1
        for rank in ranks:
            product *= rank_prime(rank)
        for suited in suitednesses:
            identity = HandIdentity(index, category, ranks, suited)
            key = _key(product, suited)
            assert key not in entries, (kind, identity)
            entries[key] = identity
            identities.append(identity)
    return Lookup(kind, arity, deck, tuple(identities), entries, frozenset(create_deck(deck)))


@functools.cache
def get_lookup(kind: LookupKind) -> Lookup:
    """Shared, lazily built table for ``kind``."""
    return build_lookup(kind)


# --- evaluation -----------------------------------------------------------

def _check_cards(lookup: Lookup, cards: Sequence[Card]) -> None:
    if len(cards) != lookup.arity:
        raise ValueError(
            f"{lookup.kind.value} hands take {lookup.arity} cards, got {len(cards)}"
        )
    if len(set(cards)) != len(cards):
        raise ValueError("duplicate cards")
    for card in cards:
        if card not in lookup._members:
            raise ValueError(f"{card} is not in the {lookup.deck.value} deck")


def _badugi_best(lookup: Lookup, cards: Sequence[Card]) -> HandIdentity:
    best = None
    for size in range(len(cards), 0, -1):
        for subset in combinations(cards, size):
            if len({c.rank for c in subset}) != size or len({c.suit for c in subset}) != size:
                continue
            identity = lookup._entries[_key(prime_product(subset), False)]
            if best is None or identity.index > best.index:
                best = identity
        if best is not None:
            return best
    raise AssertionError("every single card is a badugi")


def _lookup_codes(lookup: Lookup, codes: Sequence[int]) -> HandIdentity | None:
    """Unchecked fast path used when searching selections."""
    if lookup.kind is LookupKind.BADUGI:
        return _badugi_best(lookup, [_CODE_CARDS[c] for c in codes])
    product = 1
    suits = 0
    for code in codes:
        product *= _CARD_PRIMES[code]
        suits |= 1 << (code & 3)
    suited = lookup.uses_suitedness and suits & (suits - 1) == 0
    return lookup._entries.get(product << 1 | suited)


_CODE_CARDS = tuple(sorted(create_deck(DeckKind.STANDARD)))


def evaluate(lookup: Lookup, cards: str | Iterable[Card]) -> HandIdentity:
    """Identity of exactly ``lookup.arity`` cards.

    Raises ``ValueError`` on the wrong number of cards, duplicates, cards
    outside the lookup's deck, or an eight-or-better hand that does not
    qualify.
    """
    cards = as_cards(cards)
    _check_cards(lookup, cards)
    identity = _lookup_codes(lookup, [c.code for c in cards])
    if identity is None:
        raise ValueError(f"{''.join(map(str, cards))} does not qualify for {lookup.kind.value}")
    return identity


def dump_ordered_hands(lookup: Lookup) -> str:
    """One ``index<TAB>category<TAB>cards`` line per entry, weakest first."""
    return "".join(
        f"{h.index}\t{h.category}\t{h.cards}\n" for h in lookup.identities
    )


# --- hand types -----------------------------------------------------------

@dataclass(frozen=True)
class HandTypeSpec:
    """How a hand of some type is selected and which table ranks it.

    ``hole_used``/``board_used`` fix how many cards must come from each
    source; ``None`` for both means any ``arity`` cards of hole and board.
    ``reverse`` flips the table's order (deuce-to-seven uses the standard
    table upside down).
    """

    name: str
    lookup_kind: LookupKind
    arity: int
    hole_used: int | None = None
    board_used: int | None = None
    reverse: bool = False
    low: bool = False

    @property
    def lookup(self) -> Lookup:
        return get_lookup(self.lookup_kind)

    @property
    def qualified(self) -> bool:
        return self.lookup_kind is LookupKind.EIGHT_OR_BETTER

    def selections(self, hole: Sequence[Card], board: Sequence[Card]) -> Iterator[tuple[Card, ...]]:
        if self.hole_used is None:
            yield from combinations([*hole, *board], self.arity)
            return
        for h in combinations(hole, self.hole_used):
            for b in combinations(board, self.board_used or 0):
                yield h + b

    def can_select(self, hole_count: int, board_count: int) -> bool:
        if self.hole_used is None:
            return hole_count + board_count >= self.arity
        return hole_count >= self.hole_used and board_count >= (self.board_used or 0)


STANDARD_HIGH = HandTypeSpec("standard-high", LookupKind.STANDARD, 5)
STANDARD_LOW = HandTypeSpec("standard-low", LookupKind.STANDARD, 5, reverse=True, low=True)
GREEK_HOLDEM = HandTypeSpec("greek-holdem", LookupKind.STANDARD, 5, 2, 3)
OMAHA_HOLDEM = HandTypeSpec("omaha-holdem", LookupKind.STANDARD, 5, 2, 3)
EIGHT_OR_BETTER_LOW = HandTypeSpec("eight-or-better-low", LookupKind.EIGHT_OR_BETTER, 5, low=True)
OMAHA_EIGHT_OR_BETTER_LOW = HandTypeSpec(
    "omaha-eight-or-better-low", LookupKind.EIGHT_OR_BETTER, 5, 2, 3, low=True
)
SHORT_DECK_HOLDEM = HandTypeSpec("short-deck-holdem", LookupKind.SHORT_DECK, 5)
REGULAR_LOW = HandTypeSpec("regular-low", LookupKind.REGULAR, 5, low=True)
OMAHA_REGULAR_LOW = HandTypeSpec("omaha-regular-low", LookupKind.REGULAR, 5, 2, 3, low=True)
BADUGI = HandTypeSpec("badugi", LookupKind.BADUGI, 4, low=True)
KUHN_POKER = HandTypeSpec("kuhn-poker", LookupKind.KUHN, 1)

HAND_TYPES = {
    t.name: t
    for t in (
        STANDARD_HIGH,
        STANDARD_LOW,
        GREEK_HOLDEM,
        OMAHA_HOLDEM,
        EIGHT_OR_BETTER_LOW,
        OMAHA_EIGHT_OR_BETTER_LOW,
        SHORT_DECK_HOLDEM,
        REGULAR_LOW,
        OMAHA_REGULAR_LOW,
        BADUGI,
        KUHN_POKER,
    )
}

_ALIASES = {
    "standard": "standard-high",
    "holdem": "standard-high",
    "texas-holdem": "standard-high",
    "deuce-to-seven": "standard-low",
    "2-7": "standard-low",
    "greek": "greek-holdem",
    "omaha": "omaha-holdem",
    "omaha-hi": "omaha-holdem",
    "eight-or-better": "eight-or-better-low",
    "omaha-eight-or-better": "omaha-eight-or-better-low",
    "short-deck": "short-deck-holdem",
    "regular": "regular-low",
    "razz": "regular-low",
    "kuhn": "kuhn-poker",
}


def hand_type(name: str) -> HandTypeSpec:
    key = name.strip().lower().replace(" ", "-").replace("_", "-")
    key = _ALIASES.get(key, key)
    try:
        return HAND_TYPES[key]
    except KeyError:
        raise ValueError(f"unknown hand type {name!r}") from None


@dataclass(frozen=True, eq=False)
class Hand:
    """An evaluated hand. Hands of one type compare by strength."""

    hand_type: HandTypeSpec
    cards: tuple[Card, ...]
    identity: HandIdentity

    @property
    def strength(self) -> int:
        if self.hand_type.reverse:
            return self.hand_type.lookup.class_count + 1 - self.identity.index
        return self.identity.index

    def _other(self, other: object) -> Hand:
        if not isinstance(other, Hand):
            return NotImplemented
        if other.hand_type != self.hand_type:
            raise TypeError(
                f"cannot compare {self.hand_type.name} with {other.hand_type.name} hands"
            )
        return other

    def __eq__(self, other: object) -> bool:
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.strength == other.strength

    def __lt__(self, other: Hand) -> bool:
        other = self._other(other)
        return other if other is NotImplemented else self.strength < other.strength

    def __le__(self, other: Hand) -> bool:
        other = self._other(other)
        return other if other is NotImplemented else self.strength <= other.strength

    def __gt__(self, other: Hand) -> bool:
        other = self._other(other)
        return other if other is NotImplemented else self.strength > other.strength

    def __ge__(self, other: Hand) -> bool:
        other = self._other(other)
        return other if other is NotImplemented else self.strength >= other.strength

    def __hash__(self) -> int:
        return hash((self.hand_type.name, self.strength))

    def __str__(self) -> str:
        return f"{self.identity.category} ({''.join(map(str, self.cards))})"


def hand_from_cards(hand_type: HandTypeSpec, cards: str | Iterable[Card]) -> Hand:
    cards = as_cards(cards)
    return Hand(hand_type, tuple(cards), evaluate(hand_type.lookup, cards))


def hand_from_game(
    hand_type: HandTypeSpec,
    hole: str | Iterable[Card],
    board: str | Iterable[Card] = (),
) -> Hand | None:
    """Strongest hand obeying the type's selection rule, or ``None`` when no
    selection qualifies (eight-or-better lows)."""
    hole = as_cards(hole)
    board = as_cards(board)
    if len(set(hole) | set(board)) != len(hole) + len(board):
        raise ValueError("duplicate cards across hole and board")
    if not hand_type.can_select(len(hole), len(board)):
        raise ValueError(
            f"{hand_type.name} cannot be formed from {len(hole)} hole"
            f" and {len(board)} board cards"
        )
    lookup = hand_type.lookup
    members = lookup._members
    for card in (*hole, *board):
        if card not in members:
            raise ValueError(f"{card} is not in the {lookup.deck.value} deck")
    return _best_hand(hand_type, hole, board)


def _best_hand(hand_type: HandTypeSpec, hole, board) -> Hand | None:
    lookup = hand_type.lookup
    best = best_cards = None
    sign = -1 if hand_type.reverse else 1
    for selection in hand_type.selections(hole, board):
        identity = _lookup_codes(lookup, [c.code for c in selection])
        if identity is None:
            continue
        if best is None or sign * identity.index > sign * best.index:
            best, best_cards = identity, selection
    if best is None:
        return None
    return Hand(hand_type, tuple(best_cards), best)


def compare_hands(a: Hand, b: Hand) -> int:
    """-1, 0 or 1 as ``a`` is weaker than, equal to or stronger than ``b``."""
    if a.hand_type != b.hand_type:
        raise TypeError(f"cannot compare {a.hand_type.name} with {b.hand_type.name} hands")
    return (a.strength > b.strength) - (a.strength < b.strength)
