"""Exhaustive evaluation sweeps used by the ``bench`` command.

The 5-card sweep walks every combination through the regular lookup path.
The 7-card sweep would take hours that way, so it runs a compiled loop over
precomputed best-of-7 tables: one keyed by the prime product of the seven
ranks (ignoring suits), one keyed by the rank mask of a five-plus-card suit.
Both tables are filled from the same lookup, by taking the best of the 21
five-card subsets.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np
from numba import njit

from .cards import create_deck
from .evaluation import PRIMES, Lookup, _lookup_codes


@dataclass
class BenchResult:
    hands: int
    classes: int
    seconds: float

    @property
    def rate(self) -> float:
        return self.hands / self.seconds if self.seconds > 0 else float("inf")


def sweep_exact(lookup: Lookup) -> BenchResult:
    """Evaluate every ``lookup.arity``-card combination of the lookup's deck."""
    codes = [c.code for c in create_deck(lookup.deck)]
    seen = set()
    hands = 0
    start = time.perf_counter()
    for combo in combinations(codes, lookup.arity):
        identity = _lookup_codes(lookup, combo)
        hands += 1
        if identity is not None:
            seen.add(identity.index)
    return BenchResult(hands, len(seen), time.perf_counter() - start)


def best_of_seven_tables(lookup: Lookup) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(sorted rank products, best unsuited index per product, best flush index per mask)."""
    if lookup.arity != 5:
        raise ValueError(f"7-card sweeps need a 5-card lookup, not {lookup.kind.value}")
    ranks = sorted({int(c.rank) - 2 for c in create_deck(lookup.deck)})
    products, best = [], []
    for multiset in combinations_with_replacement(ranks, 7):
        if max(Counter(multiset).values()) > 4:
            continue
        top = 0
        for five in set(combinations(multiset, 5)):
            product = 1
            for r in five:
                product *= PRIMES[r]
            identity = lookup.get(product, False)
            if identity is not None and identity.index > top:
                top = identity.index
        product = 1
        for r in multiset:
            product *= PRIMES[r]
        products.append(product)
        best.append(top)
    order = np.argsort(products)
    products = np.asarray(products, dtype=np.int64)[order]
    best = np.asarray(best, dtype=np.int32)[order]

    flush = np.zeros(1 << 13, dtype=np.int32)
    if lookup.uses_suitedness:
        for size in (5, 6, 7):
            for subset in combinations(ranks, size):
                top = 0
                for five in combinations(subset, 5):
                    product = 1
                    for r in five:
                        product *= PRIMES[r]
                    identity = lookup.get(product, True)
                    if identity is not None and identity.index > top:
                        top = identity.index
                mask = 0
                for r in subset:
                    mask |= 1 << r
                flush[mask] = top
    return products, best, flush


@njit(cache=True)
def _popcount(x):
    count = 0
    while x:
        x &= x - 1
        count += 1
    return count


@njit(cache=True)
def _sweep7(primes, bits, suits, products, best, flush, seen):
    n = primes.shape[0]
    hands = 0
    m = np.zeros(4, dtype=np.int64)
    for a in range(n - 6):
        pa = primes[a]
        for b in range(a + 1, n - 5):
            pb = pa * primes[b]
            for c in range(b + 1, n - 4):
                pc = pb * primes[c]
                for d in range(c + 1, n - 3):
                    pd = pc * primes[d]
                    for e in range(d + 1, n - 2):
                        pe = pd * primes[e]
                        for f in range(e + 1, n - 1):
                            pf = pe * primes[f]
                            for g in range(f + 1, n):
                                p = pf * primes[g]
                                k = np.searchsorted(products, p)
                                top = best[k]
                                m[:] = 0
                                m[suits[a]] |= bits[a]
                                m[suits[b]] |= bits[b]
                                m[suits[c]] |= bits[c]
                                m[suits[d]] |= bits[d]
                                m[suits[e]] |= bits[e]
                                m[suits[f]] |= bits[f]
                                m[suits[g]] |= bits[g]
                                for s in range(4):
                                    if _popcount(m[s]) >= 5:
                                        v = flush[m[s]]
                                        if v > top:
                                            top = v
                                seen[top] = 1
                                hands += 1
    return hands


def sweep_seven(lookup: Lookup) -> BenchResult:
    """Best 5-of-7 over every 7-card combination of the lookup's deck."""
    products, best, flush = best_of_seven_tables(lookup)
    deck = create_deck(lookup.deck)
    primes = np.array([PRIMES[c.rank - 2] for c in deck], dtype=np.int64)
    bits = np.array([1 << (c.rank - 2) for c in deck], dtype=np.int64)
    suits = np.array([int(c.suit) for c in deck], dtype=np.int64)
    seen = np.zeros(lookup.class_count + 1, dtype=np.uint8)
    # compile on a tiny deck so the timing covers the sweep only
    _sweep7(primes[:7], bits[:7], suits[:7], products, best, flush, seen.copy())
    start = time.perf_counter()
    hands = _sweep7(primes, bits, suits, products, best, flush, seen)
    seconds = time.perf_counter() - start
    assert hands == comb(len(deck), 7)
    # index 0 marks "no qualifying hand"
    return BenchResult(int(hands), int(seen[1:].sum()), seconds)
