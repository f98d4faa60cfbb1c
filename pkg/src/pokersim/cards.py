"""Card, rank, suit and deck primitives.

Cards are written as two characters, rank then suit: ``"Ac"``, ``"Th"``,
``"2d"``. Ranks are upper case on output (``T`` for ten), suits lower case.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from enum import Enum, IntEnum


class Rank(IntEnum):
    DEUCE = 2
    TREY = 3
    FOUR = 4
    FIVE = 5
    SIX = 6
    SEVEN = 7
    EIGHT = 8
    NINE = 9
    TEN = 10
    JACK = 11
    QUEEN = 12
    KING = 13
    ACE = 14

    @property
    def char(self) -> str:
        return RANK_CHARS[self - 2]

    @classmethod
    def from_char(cls, char: str) -> Rank:
        try:
            return cls(RANK_CHARS.index(char.upper()) + 2)
        except ValueError:
            raise ValueError(f"unknown rank character {char!r}") from None


class Suit(IntEnum):
    """Suits. The integer order (c < d < h < s) only breaks stud bring-in ties."""

    CLUB = 0
    DIAMOND = 1
    HEART = 2
    SPADE = 3

    @property
    def char(self) -> str:
        return SUIT_CHARS[self]

    @classmethod
    def from_char(cls, char: str) -> Suit:
        # suits are case-sensitive: lower case only
        index = SUIT_CHARS.find(char) if len(char) == 1 else -1
        if index < 0:
            raise ValueError(f"unknown suit character {char!r}")
        return cls(index)


RANK_CHARS = "23456789TJQKA"
SUIT_CHARS = "cdhs"


class Card:
    """An immutable playing card.

    Instances are interned, so ``Card(Rank.ACE, Suit.CLUB) is Card(Rank.ACE,
    Suit.CLUB)`` and identity hashing/equality are valid.
    """

    __slots__ = ("rank", "suit", "code")
    _cache: dict[tuple[int, int], Card] = {}

    rank: Rank
    suit: Suit
    code: int

    def __new__(cls, rank: Rank | int, suit: Suit | int) -> Card:
        key = (int(rank), int(suit))
        card = cls._cache.get(key)
        if card is None:
            rank = Rank(rank)
            suit = Suit(suit)
            card = object.__new__(cls)
            object.__setattr__(card, "rank", rank)
            object.__setattr__(card, "suit", suit)
            object.__setattr__(card, "code", (rank - 2) * 4 + suit)
            cls._cache[key] = card
        return card

    def __setattr__(self, name, value):
        raise AttributeError("Card is immutable")

    def __reduce__(self):
        return Card, (int(self.rank), int(self.suit))

    def __copy__(self) -> Card:
        return self

    def __deepcopy__(self, memo) -> Card:
        return self

    def __lt__(self, other: Card) -> bool:
        if not isinstance(other, Card):
            return NotImplemented
        return self.code < other.code

    def __le__(self, other: Card) -> bool:
        if not isinstance(other, Card):
            return NotImplemented
        return self.code <= other.code

    def __gt__(self, other: Card) -> bool:
        if not isinstance(other, Card):
            return NotImplemented
        return self.code > other.code

    def __ge__(self, other: Card) -> bool:
        if not isinstance(other, Card):
            return NotImplemented
        return self.code >= other.code

    def __str__(self) -> str:
        return self.rank.char + self.suit.char

    def __repr__(self) -> str:
        return f"Card({self})"

    @classmethod
    def parse(cls, text: str) -> Card:
        cards = parse_cards(text)
        if len(cards) != 1:
            raise ValueError(f"expected exactly one card, got {text!r}")
        return cards[0]


def parse_cards(text: str) -> list[Card]:
    """Parse a string such as ``"Ac2d"`` into cards, in textual order.

    >>> parse_cards("Ac2d")
    [Card(Ac), Card(2d)]
    >>> parse_cards("")
    []
    """
    if len(text) % 2:
        raise ValueError(f"card string {text!r} has odd length")
    cards = []
    seen = set()
    for i in range(0, len(text), 2):
        card = Card(Rank.from_char(text[i]), Suit.from_char(text[i + 1]))
        if card in seen:
            raise ValueError(f"duplicate card {card} in {text!r}")
        seen.add(card)
        cards.append(card)
    return cards


def format_cards(cards: Iterable[Card]) -> str:
    return "".join(map(str, cards))


def as_cards(cards: str | Iterable[Card]) -> list[Card]:
    """Accept either a card string or an iterable of cards."""
    if isinstance(cards, str):
        return parse_cards(cards)
    return list(cards)


class DeckKind(Enum):
    STANDARD = "standard-52"
    SHORT_DECK = "short-deck-36"
    KUHN = "kuhn-3"

    @property
    def size(self) -> int:
        return len(create_deck(self))


_DECKS = {
    DeckKind.STANDARD: tuple(Card(r, s) for r in Rank for s in Suit),
    DeckKind.SHORT_DECK: tuple(
        Card(r, s) for r in Rank if r >= Rank.SIX for s in Suit
    ),
    DeckKind.KUHN: tuple(
        Card(r, Suit.SPADE) for r in (Rank.JACK, Rank.QUEEN, Rank.KING)
    ),
}


def create_deck(kind: DeckKind) -> list[Card]:
    """All cards of ``kind``, ranks ascending and suits c, d, h, s within a rank."""
    return list(_DECKS[kind])


def shuffle_deck(deck: Sequence[Card], seed: int) -> list[Card]:
    """Seeded Fisher-Yates shuffle.

    Uses ``random.Random(seed).shuffle``: a Mersenne Twister driving swaps
    from the last position down, each with ``randrange(i + 1)``. The
    permutation is fixed for a given seed and input order on every platform.
    """
    if not deck:
        raise ValueError("cannot shuffle an empty deck")
    cards = list(deck)
    random.Random(seed).shuffle(cards)
    return cards
