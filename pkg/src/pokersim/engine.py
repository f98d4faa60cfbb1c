"""Phase-based poker game state.

A :class:`GameState` moves through ante posting, bet collection, blind or
straddle posting, per-street dealing and betting, showdown, hand killing,
chips pushing and chips pulling. Every operation ``X`` comes as a triplet:
``verify_X`` raises ``ValueError`` when the operation is illegal, ``can_X``
reports the same as a boolean, and ``X`` verifies then applies. A rejected
operation leaves the state untouched. After every applied operation the
state skips phases that have nothing to do and runs the operations whose
automation flag is set, stopping when a manual decision is pending or the
hand is over.
"""

from __future__ import annotations

import copy
import random
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from .cards import Card, as_cards, create_deck, format_cards, shuffle_deck
from .evaluation import Hand, _best_hand
from .variants import BettingStructure, OpenerRule, VariantDefinition, validate_definition


class Phase(Enum):
    ANTE_POSTING = "ante-posting"
    BET_COLLECTION = "bet-collection"
    BLIND_OR_STRADDLE_POSTING = "blind-or-straddle-posting"
    DEALING = "dealing"
    BETTING = "betting"
    SHOWDOWN = "showdown"
    HAND_KILLING = "hand-killing"
    CHIPS_PUSHING = "chips-pushing"
    CHIPS_PULLING = "chips-pulling"
    TERMINAL = "terminal"


class Automation(Enum):
    ANTE_POSTING = "ante-posting"
    BET_COLLECTION = "bet-collection"
    BLIND_OR_STRADDLE_POSTING = "blind-or-straddle-posting"
    CARD_BURNING = "card-burning"
    HOLE_DEALING = "hole-dealing"
    BOARD_DEALING = "board-dealing"
    HOLE_CARDS_SHOWING_OR_MUCKING = "hole-cards-showing-or-mucking"
    HAND_KILLING = "hand-killing"
    CHIPS_PUSHING = "chips-pushing"
    CHIPS_PULLING = "chips-pulling"


ALL_AUTOMATIONS = frozenset(Automation)
# everything except dealing, so scripted hands supply their own cards
DEALER_AUTOMATIONS = ALL_AUTOMATIONS - {Automation.HOLE_DEALING, Automation.BOARD_DEALING}
NO_AUTOMATIONS: frozenset[Automation] = frozenset()


@dataclass(frozen=True)
class Pot:
    amount: int
    eligible: frozenset[int]


@dataclass(frozen=True)
class PlayerStatus:
    stack: int
    bet: int
    hole_cards: tuple[tuple[Card, bool], ...]
    active: bool
    all_in: bool


@dataclass(frozen=True)
class Operation:
    """A logged operation with its resolved arguments."""

    name: str
    args: tuple
    automated: bool


def side_pots(contributions: Sequence[int], active: Sequence[bool], all_in: Sequence[bool]) -> list[Pot]:
    """Split collected chips into a main pot and side pots.

    Layers are cut at the contribution level of every active all-in player.
    Active players with chips behind are eligible for every layer; all-in
    players only up to their own level; folded players never.
    """
    levels = sorted({c for c, a, x in zip(contributions, active, all_in) if a and x and c})
    top = max(contributions, default=0)
    if not levels or levels[-1] < top:
        levels.append(top)
    pots: list[Pot] = []
    previous = 0
    for level in levels:
        amount = sum(min(c, level) - min(c, previous) for c in contributions)
        eligible = frozenset(
            i
            for i, (c, a, x) in enumerate(zip(contributions, active, all_in))
            if a and (not x or c >= level)
        )
        previous = level
        if not amount:
            continue
        if pots and (not eligible or eligible == pots[-1].eligible):
            pots[-1] = Pot(pots[-1].amount + amount, pots[-1].eligible)
        else:
            pots.append(Pot(amount, eligible))
    return pots


def _spread(values: int | Sequence[int], count: int, what: str) -> tuple[int, ...]:
    if isinstance(values, int):
        values = (values,) * count
    values = tuple(values)
    if len(values) > count:
        raise ValueError(f"{len(values)} {what} given for {count} players")
    values += (0,) * (count - len(values))
    if any(v < 0 for v in values):
        raise ValueError(f"negative {what}")
    return values


def _exposed_key(cards: Sequence[Card], low: bool):
    """Strength of face-up stud cards: pairs and better, then ranks."""
    if low:
        values = [1 if c.rank == 14 else int(c.rank) for c in cards]
    else:
        values = [int(c.rank) for c in cards]
    counts = Counter(values)
    grouped = sorted(values, key=lambda v: (counts[v], v), reverse=True)
    shape = sorted(counts.values(), reverse=True)
    key = (tuple(shape), tuple(grouped))
    if low:
        return (tuple(-v for v in shape), tuple(-v for v in grouped))
    return key


class GameState:
    """Full table state for one hand of a variant.

    Seats are numbered from the first player left of the button; the last
    seat holds the button. Blinds and straddles are listed by seat, so
    ``(1, 2)`` puts the small blind on seat 0 and the big blind on seat 1.
    """

    def __init__(
        self,
        variant: VariantDefinition,
        *,
        automations: Iterable[Automation] = DEALER_AUTOMATIONS,
        antes: int | Sequence[int] = 0,
        blinds_or_straddles: int | Sequence[int] = (),
        bring_in: int = 0,
        starting_stacks: int | Sequence[int],
        player_count: int | None = None,
        seed: int | None = None,
        deck: str | Sequence[Card] | None = None,
    ):
        problems = validate_definition(variant)
        if problems:
            raise ValueError(f"invalid variant: {'; '.join(problems)}")
        if player_count is None:
            if isinstance(starting_stacks, int):
                raise ValueError("player_count is required with a uniform stack")
            player_count = len(starting_stacks)
        n = player_count
        if not variant.min_players <= n <= variant.max_players:
            raise ValueError(
                f"{variant.name} seats {variant.min_players}..{variant.max_players} players, got {n}"
            )
        stacks = tuple(starting_stacks) if not isinstance(starting_stacks, int) else (starting_stacks,) * n
        if len(stacks) != n:
            raise ValueError(f"{len(stacks)} stacks given for {n} players")
        if any(s <= 0 for s in stacks):
            raise ValueError("starting stacks must be positive")
        antes = _spread(antes, n, "antes")
        blinds = _spread(blinds_or_straddles, n, "blinds or straddles")
        if bring_in < 0:
            raise ValueError("negative bring-in")
        if bring_in and not variant.uses_bring_in:
            raise ValueError(f"{variant.name} has no bring-in")
        if bring_in and bring_in >= variant.streets[0].min_bet:
            raise ValueError("bring-in must be smaller than the completion amount")
        if not any(antes) and not any(blinds) and not bring_in:
            raise ValueError("at least one ante, blind, straddle or bring-in is required")

        full = create_deck(variant.deck)
        if deck is not None:
            deck = as_cards(deck)
            if sorted(deck) != sorted(full):
                raise ValueError("preset deck is not a permutation of the variant's deck")
        elif seed is not None:
            deck = shuffle_deck(full, seed)
        else:
            deck = full

        self.variant = variant
        self.automations = frozenset(automations)
        self.antes = antes
        self.blinds_or_straddles = blinds
        self.bring_in = bring_in
        self.starting_stacks = stacks
        self.player_count = n
        self.seed = seed

        self._deck: list[Card] = list(deck)
        self._board: list[Card] = []
        self._mucked: list[Card] = []
        self._burned: list[Card] = []
        self._stacks = list(stacks)
        self._bets = [0] * n
        self._hole: list[list[Card]] = [[] for _ in range(n)]
        self._up: list[list[bool]] = [[] for _ in range(n)]
        self._active = [True] * n
        self._contributions = [0] * n
        self._pots: list[Pot] = []
        self._pot_history: list[int] = []
        self._log: list[Operation] = []
        self._recycles = 0

        self._phase = Phase.ANTE_POSTING
        self._street = -1
        self._collecting_antes = True
        self._ante_queue = [i for i in range(n) if antes[i]]
        self._blind_queue: list[int] = []
        self._burn_pending = False
        self._hole_queue: list[tuple[int, bool]] = []
        self._board_owed = 0
        self._draw_queue: list[int] = []
        self._discards: list[list[Card]] = [[] for _ in range(n)]
        self._actors: list[int] = []
        self._acted = [False] * n
        self._increment = 0
        self._raises = 0
        self._aggressor: int | None = None
        self._opener: int | None = None
        self._bring_in_player: int | None = None
        self._showdown_queue: list[int] = []
        self._kill_queue: list[int] = []

        self._update()

    # --- read-only views ---------------------------------------------------

    @property
    def phase(self) -> Phase:
        return self._phase

    @property
    def street_index(self) -> int | None:
        return self._street if self._street >= 0 else None

    @property
    def deck_cards(self) -> tuple[Card, ...]:
        return tuple(self._deck)

    @property
    def board_cards(self) -> tuple[Card, ...]:
        return tuple(self._board)

    @property
    def mucked_cards(self) -> tuple[Card, ...]:
        return tuple(self._mucked)

    @property
    def burned_cards(self) -> tuple[Card, ...]:
        return tuple(self._burned)

    @property
    def stacks(self) -> tuple[int, ...]:
        return tuple(self._stacks)

    @property
    def bets(self) -> tuple[int, ...]:
        return tuple(self._bets)

    @property
    def hole_cards(self) -> tuple[tuple[Card, ...], ...]:
        return tuple(tuple(h) for h in self._hole)

    @property
    def hole_card_statuses(self) -> tuple[tuple[bool, ...], ...]:
        """Face-up flags parallel to ``hole_cards``."""
        return tuple(tuple(u) for u in self._up)

    @property
    def statuses(self) -> tuple[bool, ...]:
        """Whether each player is still in the hand."""
        return tuple(self._active)

    @property
    def pots(self) -> tuple[Pot, ...]:
        return tuple(self._pots)

    @property
    def total_pot_amount(self) -> int:
        return sum(p.amount for p in self._pots)

    @property
    def pot_history(self) -> tuple[int, ...]:
        """Total pot after each bet collection."""
        return tuple(self._pot_history)

    @property
    def operations(self) -> tuple[Operation, ...]:
        return tuple(self._log)

    @property
    def players(self) -> tuple[PlayerStatus, ...]:
        return tuple(
            PlayerStatus(
                self._stacks[i],
                self._bets[i],
                tuple(zip(self._hole[i], self._up[i])),
                self._active[i],
                self._active[i] and not self._stacks[i],
            )
            for i in range(self.player_count)
        )

    @property
    def actor_index(self) -> int | None:
        """Whose decision is pending in betting, drawing or showdown."""
        if self._phase is Phase.BETTING and self._actors:
            return self._actors[0]
        if self._phase is Phase.DEALING and self._draw_queue and not self._burn_pending:
            return self._draw_queue[0]
        if self._phase is Phase.SHOWDOWN and self._showdown_queue:
            return self._showdown_queue[0]
        return None

    @property
    def status(self) -> bool:
        """False once the hand is over."""
        return self._phase is not Phase.TERMINAL

    @property
    def min_completion_betting_or_raising_to(self) -> int | None:
        try:
            return self._raise_bounds()[0]
        except ValueError:
            return None

    @property
    def max_completion_betting_or_raising_to(self) -> int | None:
        try:
            return self._raise_bounds()[1]
        except ValueError:
            return None

    @property
    def checking_or_calling_amount(self) -> int | None:
        if self._phase is not Phase.BETTING or not self._actors:
            return None
        p = self._actors[0]
        return min(max(self._bets) - self._bets[p], self._stacks[p])

    # --- equality and copying ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GameState):
            return NotImplemented
        return vars(self) == vars(other)

    __hash__ = None  # mutable

    def __deepcopy__(self, memo):
        memo[id(self.variant)] = self.variant
        clone = object.__new__(GameState)
        for key, value in vars(self).items():
            setattr(clone, key, copy.deepcopy(value, memo))
        return clone

    def copy(self) -> GameState:
        return copy.deepcopy(self)

    # --- helpers -----------------------------------------------------------

    @property
    def _street_def(self):
        return self.variant.streets[self._street]

    def _in_order(self, start: int, players: Iterable[int]) -> list[int]:
        """``players`` rotated so seats run clockwise from ``start``."""
        n = self.player_count
        return sorted(players, key=lambda i: (i - start) % n)

    def _active_count(self) -> int:
        return sum(self._active)

    def _all_in(self, i: int) -> bool:
        return self._active[i] and self._stacks[i] == 0

    def _require(self, phase: Phase) -> None:
        if self._phase is not phase:
            raise ValueError(f"not in the {phase.value} phase (phase is {self._phase.value})")

    def _hand(self, player: int, type_index: int) -> Hand | None:
        hand_type = self.variant.hand_types[type_index]
        return _best_hand(hand_type, self._hole[player], self._board)

    def _pot_winners(self, pot: Pot) -> list[list[int]]:
        """Winners per live hand type for ``pot``; non-qualifying types dropped."""
        eligible = [i for i in sorted(pot.eligible) if self._active[i]]
        if len(eligible) == 1:
            return [eligible]
        results = []
        for t in range(len(self.variant.hand_types)):
            hands = {i: self._hand(i, t) for i in eligible}
            hands = {i: h for i, h in hands.items() if h is not None}
            if not hands:
                continue
            best = max(h.strength for h in hands.values())
            results.append([i for i, h in hands.items() if h.strength == best])
        return results or [eligible]

    def _log_op(self, name: str, args: tuple, automated: bool) -> None:
        self._log.append(Operation(name, args, automated))

    # --- phase machinery ---------------------------------------------------

    def _phase_done(self) -> bool:
        phase = self._phase
        if phase is Phase.ANTE_POSTING:
            return not self._ante_queue
        if phase is Phase.BET_COLLECTION or phase is Phase.CHIPS_PULLING:
            return not any(self._bets)
        if phase is Phase.BLIND_OR_STRADDLE_POSTING:
            return not self._blind_queue
        if phase is Phase.DEALING:
            return not (self._burn_pending or self._hole_queue or self._board_owed or self._draw_queue)
        if phase is Phase.BETTING:
            return not self._actors
        if phase is Phase.SHOWDOWN:
            return not self._showdown_queue
        if phase is Phase.HAND_KILLING:
            return not self._kill_queue
        if phase is Phase.CHIPS_PUSHING:
            return not self._pots
        return False

    def _advance_phase(self) -> None:
        phase = self._phase
        if phase is Phase.ANTE_POSTING:
            self._phase = Phase.BET_COLLECTION
            self._collecting_antes = True
        elif phase is Phase.BET_COLLECTION:
            if self._collecting_antes:
                self._begin_blinds()
            elif self._street + 1 < len(self.variant.streets):
                self._begin_dealing(self._street + 1)
            else:
                self._begin_showdown()
        elif phase is Phase.BLIND_OR_STRADDLE_POSTING:
            self._begin_dealing(0)
        elif phase is Phase.DEALING:
            self._begin_betting()
        elif phase is Phase.BETTING:
            self._phase = Phase.BET_COLLECTION
            self._collecting_antes = False
        elif phase is Phase.SHOWDOWN:
            self._begin_hand_killing()
        elif phase is Phase.HAND_KILLING:
            self._phase = Phase.CHIPS_PUSHING
        elif phase is Phase.CHIPS_PUSHING:
            self._phase = Phase.CHIPS_PULLING
        elif phase is Phase.CHIPS_PULLING:
            self._phase = Phase.TERMINAL

    def _begin_blinds(self) -> None:
        self._phase = Phase.BLIND_OR_STRADDLE_POSTING
        self._blind_queue = [
            i for i in range(self.player_count) if self.blinds_or_straddles[i] and self._stacks[i]
        ]

    def _begin_dealing(self, street: int) -> None:
        self._phase = Phase.DEALING
        self._street = street
        self._discards = [[] for _ in range(self.player_count)]
        if self._active_count() <= 1:
            return
        definition = self._street_def
        players = [i for i in range(self.player_count) if self._active[i]]
        self._burn_pending = definition.burn and bool(self._deck or self._mucked)
        self._hole_queue = [(i, up) for up in definition.hole_deal for i in players]
        self._board_owed = definition.board_deal
        self._draw_queue = players if definition.draw else []

    def _begin_betting(self) -> None:
        self._phase = Phase.BETTING
        definition = self._street_def
        n = self.player_count
        self._aggressor = None
        self._raises = 0
        self._acted = [False] * n
        self._bring_in_player = None
        self._increment = definition.min_bet
        if self._street == 0:
            self._increment = max(definition.min_bet, max(self.blinds_or_straddles))
        self._opener = self._find_opener()
        if self._active_count() <= 1:
            return
        actors = [i for i in range(n) if self._active[i] and self._stacks[i]]
        top = max(self._bets)
        if not actors or (len(actors) == 1 and self._bets[actors[0]] >= top):
            return
        self._actors = self._in_order(self._opener, actors)

    def _find_opener(self) -> int:
        rule = self._street_def.opener
        n = self.player_count
        active = [i for i in range(n) if self._active[i]]
        low = self.variant.hand_types[0].low
        if rule is OpenerRule.POSITION_AFTER_BLINDS:
            posted = [i for i in range(n) if self.blinds_or_straddles[i]]
            start = (posted[-1] + 1) % n if posted else 0
        elif rule is OpenerRule.FIRST_AFTER_BUTTON:
            start = 0
        elif rule is OpenerRule.BRING_IN:
            def door(i):
                card = [c for c, u in zip(self._hole[i], self._up[i]) if u][-1]
                if low:
                    return (1 if card.rank == 14 else int(card.rank), int(card.suit))
                return (-int(card.rank), -int(card.suit))
            start = max(active, key=lambda i: (door(i), -i))
            if self.bring_in:
                self._bring_in_player = start
        else:
            def shown(i):
                cards = [c for c, u in zip(self._hole[i], self._up[i]) if u]
                return _exposed_key(cards, low)
            start = max(active, key=lambda i: (shown(i), -i))
        return start

    def _begin_showdown(self) -> None:
        self._phase = Phase.SHOWDOWN
        active = [i for i in range(self.player_count) if self._active[i]]
        if len(active) <= 1:
            return
        if sum(1 for i in active if self._stacks[i]) <= 1:
            # all-in: every hand is turned face up, no decisions
            for i in active:
                self._up[i] = [True] * len(self._up[i])
            return
        start = self._aggressor if self._aggressor is not None and self._active[self._aggressor] else self._opener
        self._showdown_queue = self._in_order(start if start is not None else 0, active)

    def _begin_hand_killing(self) -> None:
        self._phase = Phase.HAND_KILLING
        if self._active_count() <= 1:
            return
        winners = set()
        for pot in self._pots:
            for group in self._pot_winners(pot):
                winners.update(group)
        self._kill_queue = [i for i in range(self.player_count) if self._active[i] and i not in winners]

    def _update(self) -> None:
        while True:
            if self._phase is Phase.TERMINAL:
                return
            if self._phase_done():
                self._advance_phase()
                continue
            if not self._automate():
                return

    def _automate(self) -> bool:
        """Run one automated operation; False if the next step is manual."""
        auto = self.automations
        phase = self._phase
        if phase is Phase.ANTE_POSTING and Automation.ANTE_POSTING in auto:
            self._post_ante(self.verify_post_ante(), True)
        elif phase is Phase.BET_COLLECTION and Automation.BET_COLLECTION in auto:
            self.verify_collect_bets()
            self._collect_bets(True)
        elif phase is Phase.BLIND_OR_STRADDLE_POSTING and Automation.BLIND_OR_STRADDLE_POSTING in auto:
            self._post_blind(self.verify_post_blind_or_straddle(), True)
        elif phase is Phase.DEALING:
            if self._burn_pending:
                if Automation.CARD_BURNING not in auto:
                    return False
                self._burn(self.verify_burn_card(), True)
            elif self._hole_queue and Automation.HOLE_DEALING in auto:
                self._deal_hole(*self.verify_deal_hole(), True)
            elif self._board_owed and Automation.BOARD_DEALING in auto:
                self._deal_board(self.verify_deal_board(), True)
            else:
                return False
        elif phase is Phase.SHOWDOWN and Automation.HOLE_CARDS_SHOWING_OR_MUCKING in auto:
            self._show_or_muck(*self.verify_show_or_muck_hole_cards(), True)
        elif phase is Phase.HAND_KILLING and Automation.HAND_KILLING in auto:
            self._kill(self.verify_kill_hand(), True)
        elif phase is Phase.CHIPS_PUSHING and Automation.CHIPS_PUSHING in auto:
            self.verify_push_chips()
            self._push(True)
        elif phase is Phase.CHIPS_PULLING and Automation.CHIPS_PULLING in auto:
            self._pull(self.verify_pull_chips(), True)
        else:
            return False
        return True

    # --- ante posting ------------------------------------------------------

    def verify_post_ante(self, player: int | None = None) -> int:
        self._require(Phase.ANTE_POSTING)
        if player is None:
            return self._ante_queue[0]
        if player not in self._ante_queue:
            raise ValueError(f"player {player} owes no ante")
        return player

    def can_post_ante(self, player: int | None = None) -> bool:
        try:
            self.verify_post_ante(player)
        except ValueError:
            return False
        return True

    def post_ante(self, player: int | None = None) -> int:
        """Post the ante owed by ``player`` (default: the next one owed)."""
        player = self.verify_post_ante(player)
        amount = self._post_ante(player, False)
        self._update()
        return amount

    def _post_ante(self, player: int, automated: bool) -> int:
        amount = min(self.antes[player], self._stacks[player])
        self._stacks[player] -= amount
        self._bets[player] += amount
        self._ante_queue.remove(player)
        self._log_op("post_ante", (player,), automated)
        return amount

    # --- bet collection ----------------------------------------------------

    def verify_collect_bets(self) -> None:
        self._require(Phase.BET_COLLECTION)

    def can_collect_bets(self) -> bool:
        try:
            self.verify_collect_bets()
        except ValueError:
            return False
        return True

    def collect_bets(self) -> None:
        self.verify_collect_bets()
        self._collect_bets(False)
        self._update()

    def _collect_bets(self, automated: bool) -> None:
        for i, bet in enumerate(self._bets):
            self._contributions[i] += bet
        self._bets = [0] * self.player_count
        all_in = [self._stacks[i] == 0 for i in range(self.player_count)]
        self._pots = side_pots(self._contributions, self._active, all_in)
        self._pot_history.append(self.total_pot_amount)
        self._log_op("collect_bets", (), automated)

    # --- blinds and straddles ----------------------------------------------

    def verify_post_blind_or_straddle(self, player: int | None = None) -> int:
        self._require(Phase.BLIND_OR_STRADDLE_POSTING)
        if player is None:
            return self._blind_queue[0]
        if player not in self._blind_queue:
            raise ValueError(f"player {player} owes no blind or straddle")
        return player

    def can_post_blind_or_straddle(self, player: int | None = None) -> bool:
        try:
            self.verify_post_blind_or_straddle(player)
        except ValueError:
            return False
        return True

    def post_blind_or_straddle(self, player: int | None = None) -> int:
        player = self.verify_post_blind_or_straddle(player)
        amount = self._post_blind(player, False)
        self._update()
        return amount

    def _post_blind(self, player: int, automated: bool) -> int:
        amount = min(self.blinds_or_straddles[player], self._stacks[player])
        self._stacks[player] -= amount
        self._bets[player] += amount
        self._blind_queue.remove(player)
        self._log_op("post_blind_or_straddle", (player,), automated)
        return amount

    # --- dealing -----------------------------------------------------------

    def _pool(self, player: int | None, count: int) -> list[Card]:
        """Cards ``player`` may be dealt: the deck, plus recyclable muck if short."""
        if len(self._deck) >= count:
            return self._deck
        own = set(self._discards[player]) if player is not None else set()
        pool = self._deck + [c for c in self._mucked if c not in own]
        if len(pool) < count:
            pool = self._deck + self._mucked
        return pool

    def _recycle(self, player: int | None, count: int) -> None:
        """Shuffle mucked cards back under the deck when it runs short."""
        if len(self._deck) >= count:
            return
        pool = self._pool(player, count)
        returned = pool[len(self._deck):]
        rng = random.Random(f"{self.seed}:{self._recycles}")
        self._recycles += 1
        returned = returned[:]
        rng.shuffle(returned)
        taken = set(returned)
        self._mucked = [c for c in self._mucked if c not in taken]
        self._deck.extend(returned)

    def verify_burn_card(self, card: Card | str | None = None) -> Card | None:
        """Returns the card to burn, or None for the top card."""
        self._require(Phase.DEALING)
        if not self._burn_pending:
            raise ValueError("no card is due to be burned")
        pool = self._pool(None, 1)
        if card is None:
            if not pool:
                raise ValueError("no cards left to burn")
            return None
        card = Card.parse(card) if isinstance(card, str) else card
        if card not in pool:
            raise ValueError(f"{card} is not in the deck")
        return card

    def can_burn_card(self, card: Card | str | None = None) -> bool:
        try:
            self.verify_burn_card(card)
        except ValueError:
            return False
        return True

    def burn_card(self, card: Card | str | None = None) -> Card:
        card = self._burn(self.verify_burn_card(card), False)
        self._update()
        return card

    def _burn(self, card: Card | None, automated: bool) -> Card:
        self._recycle(None, 1)
        if card is None:
            card = self._deck[0]
        self._deck.remove(card)
        self._burned.append(card)
        self._burn_pending = False
        self._log_op("burn_card", (str(card),), automated)
        return card

    def verify_deal_hole(
        self, cards: str | Sequence[Card] | None = None, player: int | None = None
    ) -> tuple[list[Card] | None, int]:
        """Returns the cards (None for one off the top) and the target player."""
        self._require(Phase.DEALING)
        if self._burn_pending:
            raise ValueError("a card must be burned first")
        if not self._hole_queue:
            raise ValueError("no hole cards are due")
        if player is None:
            player = self._hole_queue[0][0]
        owed = sum(1 for i, _ in self._hole_queue if i == player)
        if not owed:
            raise ValueError(f"player {player} is owed no hole cards")
        if cards is None:
            if not self._pool(player, 1):
                raise ValueError("no cards left to deal")
            return None, player
        cards = as_cards(cards)
        if not cards:
            raise ValueError("no cards given")
        if len(cards) > owed:
            raise ValueError(f"player {player} is owed {owed} cards, not {len(cards)}")
        pool = set(self._pool(player, len(cards)))
        for card in cards:
            if card not in pool:
                raise ValueError(f"{card} is not in the deck")
        return cards, player

    def can_deal_hole(self, cards: str | Sequence[Card] | None = None, player: int | None = None) -> bool:
        try:
            self.verify_deal_hole(cards, player)
        except ValueError:
            return False
        return True

    def deal_hole(self, cards: str | Sequence[Card] | None = None, player: int | None = None) -> list[Card]:
        """Deal ``cards`` (default: one card off the top) to ``player``
        (default: the next player owed a card)."""
        cards = self._deal_hole(*self.verify_deal_hole(cards, player), False)
        self._update()
        return cards

    def _deal_hole(self, cards: list[Card] | None, player: int, automated: bool) -> list[Card]:
        self._recycle(player, len(cards) if cards else 1)
        if cards is None:
            cards = self._deck[:1]
        for card in cards:
            self._deck.remove(card)
            slot = next(k for k, (i, _) in enumerate(self._hole_queue) if i == player)
            _, up = self._hole_queue.pop(slot)
            self._hole[player].append(card)
            self._up[player].append(up)
        self._log_op("deal_hole", (format_cards(cards), player), automated)
        return cards

    def verify_deal_board(self, cards: str | Sequence[Card] | None = None) -> list[Card]:
        self._require(Phase.DEALING)
        if self._burn_pending:
            raise ValueError("a card must be burned first")
        if not self._board_owed:
            raise ValueError("no board cards are due")
        if cards is None:
            if len(self._deck) < self._board_owed:
                raise ValueError("not enough cards left")
            return self._deck[: self._board_owed]
        cards = as_cards(cards)
        if not cards:
            raise ValueError("no cards given")
        if len(cards) > self._board_owed:
            raise ValueError(f"{self._board_owed} board cards are due, not {len(cards)}")
        for card in cards:
            if card not in self._deck:
                raise ValueError(f"{card} is not in the deck")
        return cards

    def can_deal_board(self, cards: str | Sequence[Card] | None = None) -> bool:
        try:
            self.verify_deal_board(cards)
        except ValueError:
            return False
        return True

    def deal_board(self, cards: str | Sequence[Card] | None = None) -> list[Card]:
        cards = self.verify_deal_board(cards)
        self._deal_board(cards, False)
        self._update()
        return cards

    def _deal_board(self, cards: list[Card], automated: bool) -> None:
        for card in cards:
            self._deck.remove(card)
            self._board.append(card)
        self._board_owed -= len(cards)
        self._log_op("deal_board", (format_cards(cards),), automated)

    def verify_stand_pat_or_discard(self, cards: str | Sequence[Card] = ()) -> list[Card]:
        self._require(Phase.DEALING)
        if not self._draw_queue:
            raise ValueError("no player is due to draw")
        if self._burn_pending:
            raise ValueError("a card must be burned first")
        cards = as_cards(cards)
        player = self._draw_queue[0]
        for card in cards:
            if card not in self._hole[player]:
                raise ValueError(f"player {player} does not hold {card}")
        return cards

    def can_stand_pat_or_discard(self, cards: str | Sequence[Card] = ()) -> bool:
        try:
            self.verify_stand_pat_or_discard(cards)
        except ValueError:
            return False
        return True

    def stand_pat_or_discard(self, cards: str | Sequence[Card] = ()) -> list[Card]:
        """Discard ``cards`` (empty: stand pat); replacements become owed."""
        cards = self.verify_stand_pat_or_discard(cards)
        player = self._draw_queue.pop(0)
        for card in cards:
            k = self._hole[player].index(card)
            del self._hole[player][k]
            del self._up[player][k]
            self._mucked.append(card)
            self._discards[player].append(card)
            self._hole_queue.append((player, False))
        self._log_op("stand_pat_or_discard", (format_cards(cards),), False)
        self._update()
        return cards

    # --- betting -----------------------------------------------------------

    def _actor(self) -> int:
        self._require(Phase.BETTING)
        if not self._actors:
            raise ValueError("no player is due to act")
        return self._actors[0]

    def _bring_in_due(self, player: int) -> bool:
        return (
            self._bring_in_player == player
            and self._street == 0
            and not any(self._bets)
        )

    def verify_fold(self) -> int:
        player = self._actor()
        if self._bets[player] >= max(self._bets):
            raise ValueError("folding is not allowed when checking is free")
        return player

    def can_fold(self) -> bool:
        try:
            self.verify_fold()
        except ValueError:
            return False
        return True

    def fold(self) -> None:
        player = self.verify_fold()
        self._actors.pop(0)
        self._active[player] = False
        self._mucked.extend(self._hole[player])
        self._hole[player] = []
        self._up[player] = []
        if self._active_count() <= 1:
            self._actors = []
        self._log_op("fold", (), False)
        self._update()

    def verify_check_or_call(self) -> int:
        player = self._actor()
        if self._bring_in_due(player):
            raise ValueError("the bring-in player must post the bring-in or complete")
        return min(max(self._bets) - self._bets[player], self._stacks[player])

    def can_check_or_call(self) -> bool:
        try:
            self.verify_check_or_call()
        except ValueError:
            return False
        return True

    def check_or_call(self) -> int:
        """Match the largest bet (all-in for less if short); returns chips added."""
        amount = self.verify_check_or_call()
        player = self._actors.pop(0)
        self._stacks[player] -= amount
        self._bets[player] += amount
        self._acted[player] = True
        self._log_op("check_or_call", (), False)
        self._update()
        return amount

    def verify_post_bring_in(self) -> int:
        player = self._actor()
        if not self.variant.uses_bring_in or not self.bring_in:
            raise ValueError("this game has no bring-in")
        if not self._bring_in_due(player):
            raise ValueError("no bring-in is due from this player")
        return min(self.bring_in, self._stacks[player])

    def can_post_bring_in(self) -> bool:
        try:
            self.verify_post_bring_in()
        except ValueError:
            return False
        return True

    def post_bring_in(self) -> int:
        amount = self.verify_post_bring_in()
        player = self._actors.pop(0)
        self._stacks[player] -= amount
        self._bets[player] += amount
        self._acted[player] = True
        self._log_op("post_bring_in", (), False)
        self._update()
        return amount

    def _raise_bounds(self) -> tuple[int, int]:
        """(min, max) legal raise-to amounts for the actor, and whether min is full."""
        player = self._actor()
        street = self._street_def
        top = max(self._bets)
        everything = self._bets[player] + self._stacks[player]
        if everything <= top:
            raise ValueError("not enough chips to raise")
        if street.max_raises is not None and self._raises >= street.max_raises:
            raise ValueError(f"the street is capped at {street.max_raises} bets or raises")
        if self._acted[player]:
            raise ValueError("betting was not reopened by a full raise")
        full = street.min_bet if top < street.min_bet else top + self._increment
        structure = self.variant.betting_structure
        if structure is BettingStructure.FIXED_LIMIT:
            high = full
        elif structure is BettingStructure.POT_LIMIT:
            call = top - self._bets[player]
            high = top + self.total_pot_amount + sum(self._bets) + call
        else:
            high = everything
        high = min(max(high, full), everything)
        return min(full, everything), high

    def verify_complete_bet_or_raise_to(self, amount: int | None = None) -> int:
        low, high = self._raise_bounds()
        if amount is None:
            return low
        if amount < low:
            raise ValueError(f"raise to {amount} is below the minimum of {low}")
        if amount > high:
            raise ValueError(f"raise to {amount} is above the maximum of {high}")
        return amount

    def can_complete_bet_or_raise_to(self, amount: int | None = None) -> bool:
        try:
            self.verify_complete_bet_or_raise_to(amount)
        except ValueError:
            return False
        return True

    def complete_bet_or_raise_to(self, amount: int | None = None) -> int:
        """Complete, bet or raise so the actor's total bet is ``amount``."""
        amount = self.verify_complete_bet_or_raise_to(amount)
        player = self._actors.pop(0)
        street = self._street_def
        top = max(self._bets)
        full = street.min_bet if top < street.min_bet else top + self._increment
        self._stacks[player] -= amount - self._bets[player]
        self._bets[player] = amount
        if amount >= full:
            self._increment = max(self._increment, amount - top)
            self._raises += 1
            self._acted = [False] * self.player_count
        self._acted[player] = True
        self._aggressor = player
        others = [
            i
            for i in range(self.player_count)
            if i != player and self._active[i] and self._stacks[i] and self._bets[i] < amount
        ]
        self._actors = self._in_order(player, others)
        self._log_op("complete_bet_or_raise_to", (amount,), False)
        self._update()
        return amount

    # --- showdown ----------------------------------------------------------

    def _could_win(self, player: int) -> bool:
        """Whether the hand beats or ties every shown hand for some pot share."""
        for pot in self._pots:
            if player not in pot.eligible:
                continue
            rivals = [
                i for i in pot.eligible
                if i != player and self._active[i] and self._up[i] and all(self._up[i])
            ]
            for t in range(len(self.variant.hand_types)):
                mine = self._hand(player, t)
                if mine is None:
                    continue
                shown = [h for h in (self._hand(i, t) for i in rivals) if h is not None]
                if all(mine >= h for h in shown):
                    return True
        return False

    def _sole_contender(self, player: int) -> bool:
        """Mucking would leave some pot with nobody to win it."""
        return any(
            player in pot.eligible
            and not any(self._active[i] for i in pot.eligible if i != player)
            for pot in self._pots
        )

    def verify_show_or_muck_hole_cards(self, show: bool | None = None) -> tuple[int, bool]:
        self._require(Phase.SHOWDOWN)
        if not self._showdown_queue:
            raise ValueError("no player is due to show or muck")
        player = self._showdown_queue[0]
        forced = self._stacks[player] == 0 or self._sole_contender(player)
        if show is None:
            show = forced or self._could_win(player)
        if not show and forced:
            raise ValueError("an all-in or sole contending hand must be shown")
        return player, show

    def can_show_or_muck_hole_cards(self, show: bool | None = None) -> bool:
        try:
            self.verify_show_or_muck_hole_cards(show)
        except ValueError:
            return False
        return True

    def show_or_muck_hole_cards(self, show: bool | None = None) -> bool:
        """Show (True) or muck (False); ``None`` shows iff the hand can win a share."""
        player, show = self.verify_show_or_muck_hole_cards(show)
        self._show_or_muck(player, show, False)
        self._update()
        return show

    def _show_or_muck(self, player: int, show: bool, automated: bool) -> None:
        self._showdown_queue.remove(player)
        if show:
            self._up[player] = [True] * len(self._up[player])
        else:
            self._active[player] = False
            self._mucked.extend(self._hole[player])
            self._hole[player] = []
            self._up[player] = []
            if self._active_count() <= 1:
                self._showdown_queue = []
        self._log_op("show_or_muck_hole_cards", (show,), automated)

    # --- hand killing ------------------------------------------------------

    def verify_kill_hand(self, player: int | None = None) -> int:
        self._require(Phase.HAND_KILLING)
        if player is None:
            return self._kill_queue[0]
        if player not in self._kill_queue:
            raise ValueError(f"player {player}'s hand wins a share and cannot be killed")
        return player

    def can_kill_hand(self, player: int | None = None) -> bool:
        try:
            self.verify_kill_hand(player)
        except ValueError:
            return False
        return True

    def kill_hand(self, player: int | None = None) -> int:
        player = self.verify_kill_hand(player)
        self._kill(player, False)
        self._update()
        return player

    def _kill(self, player: int, automated: bool) -> None:
        self._kill_queue.remove(player)
        self._active[player] = False
        self._mucked.extend(self._hole[player])
        self._hole[player] = []
        self._up[player] = []
        self._log_op("kill_hand", (player,), automated)

    # --- chips -------------------------------------------------------------

    def verify_push_chips(self) -> None:
        self._require(Phase.CHIPS_PUSHING)

    def can_push_chips(self) -> bool:
        try:
            self.verify_push_chips()
        except ValueError:
            return False
        return True

    def push_chips(self) -> tuple[int, ...]:
        """Award the outermost remaining pot; returns the chips each seat received."""
        self.verify_push_chips()
        received = self._push(False)
        self._update()
        return received

    def _push(self, automated: bool) -> tuple[int, ...]:
        pot = self._pots.pop()
        groups = self._pot_winners(pot)
        portions = [pot.amount // len(groups)] * len(groups)
        # odd chip goes to the high half
        portions[0] += pot.amount - sum(portions)
        received = [0] * self.player_count
        for portion, winners in zip(portions, groups):
            winners = sorted(winners)
            share, odd = divmod(portion, len(winners))
            for k, i in enumerate(winners):
                received[i] += share + (k < odd)
        for i, amount in enumerate(received):
            self._bets[i] += amount
        self._log_op("push_chips", (), automated)
        return tuple(received)

    def verify_pull_chips(self, player: int | None = None) -> int:
        self._require(Phase.CHIPS_PULLING)
        if player is None:
            return next(i for i, b in enumerate(self._bets) if b)
        if not self._bets[player]:
            raise ValueError(f"player {player} has no chips to pull")
        return player

    def can_pull_chips(self, player: int | None = None) -> bool:
        try:
            self.verify_pull_chips(player)
        except ValueError:
            return False
        return True

    def pull_chips(self, player: int | None = None) -> int:
        player = self.verify_pull_chips(player)
        amount = self._pull(player, False)
        self._update()
        return amount

    def _pull(self, player: int, automated: bool) -> int:
        amount = self._bets[player]
        self._stacks[player] += amount
        self._bets[player] = 0
        self._log_op("pull_chips", (player,), automated)
        return amount


def create_state(
    variant: VariantDefinition,
    *,
    automations: Iterable[Automation] = DEALER_AUTOMATIONS,
    antes: int | Sequence[int] = 0,
    blinds_or_straddles: int | Sequence[int] = (),
    bring_in: int = 0,
    starting_stacks: int | Sequence[int],
    player_count: int | None = None,
    seed: int | None = None,
    deck: str | Sequence[Card] | None = None,
) -> GameState:
    return GameState(
        variant,
        automations=automations,
        antes=antes,
        blinds_or_straddles=blinds_or_straddles,
        bring_in=bring_in,
        starting_stacks=starting_stacks,
        player_count=player_count,
        seed=seed,
        deck=deck,
    )
