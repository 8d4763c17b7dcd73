"""Shared fixtures and set-based oracles.

The oracles use frozensets and itertools only, so they share no code with
the bit-mask implementation they check.
"""

from __future__ import annotations

from itertools import chain, combinations

import pytest

from simplegames.core import SimpleGame, WeightedGame, game_from_weighted
from simplegames.generate import random_corpus


def game(n: int, *sets: str | tuple[int, ...]) -> SimpleGame:
    """Build a game from 1-based coalitions: ``game(5, "12", "134")``."""
    coalitions = [[int(c) - 1 for c in s] if isinstance(s, str) else [p - 1 for p in s]
                  for s in sets]
    return SimpleGame.from_coalitions(n, coalitions)


def labelled(fam) -> set[frozenset[int]]:
    """A family as 1-based frozensets."""
    return {frozenset(p + 1 for p in c.players) for c in fam}


def sets1(*sets: str) -> set[frozenset[int]]:
    return {frozenset(int(c) for c in s) for s in sets}


# ---------------------------------------------------------------- oracles

def subsets(items):
    items = list(items)
    return (frozenset(c) for c in chain.from_iterable(combinations(items, k)
                                                      for k in range(len(items) + 1)))


def oracle_min(family) -> set[frozenset]:
    family = set(family)
    return {f for f in family if not any(g < f for g in family)}


def oracle_mwc_sets(g: SimpleGame) -> list[frozenset]:
    return [frozenset(c.players) for c in g.mwc]


def oracle_wins(mwcs, s: frozenset) -> bool:
    return any(m <= s for m in mwcs)


def oracle_dual_mwc(g: SimpleGame) -> set[frozenset]:
    players = frozenset(range(g.n))
    mwcs = oracle_mwc_sets(g)
    return oracle_min(s for s in subsets(players) if not oracle_wins(mwcs, players - s))


def oracle_weak(g: SimpleGame, i: int, j: int) -> bool:
    mwcs = oracle_mwc_sets(g)
    rest = frozenset(range(g.n)) - {i, j}
    return all(oracle_wins(mwcs, s | {i}) for s in subsets(rest) if oracle_wins(mwcs, s | {j}))


def oracle_weighted_mwc(wg: WeightedGame) -> set[frozenset]:
    win = [s for s in subsets(range(wg.n)) if sum(wg.weights[p] for p in s) >= wg.quota]
    return oracle_min(win)


# ---------------------------------------------------------------- reference games

@pytest.fixture
def example1() -> SimpleGame:
    return game(5, "12", "13", "34", "245", "145")


@pytest.fixture
def weighted_41111() -> SimpleGame:
    return game_from_weighted(WeightedGame((4, 2, 1, 1, 1), 6))


@pytest.fixture
def larger_extended() -> SimpleGame:
    return game(5, "12", "134", "135", "145", "2345")


@pytest.fixture(scope="session")
def corpus():
    """The 500-game corpus shared by the property suites."""
    return random_corpus(seed=0, size=500)


def all_antichains(n: int):
    """Every non-empty antichain of non-empty subsets of n players."""
    masks = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))

    def extend(start, chosen):
        if chosen:
            yield tuple(chosen)
        for k in range(start, len(masks)):
            m = masks[k]
            # later masks are never smaller, so only "c ⊆ m" can clash
            if all(c & m != c for c in chosen):
                chosen.append(m)
                yield from extend(k + 1, chosen)
                chosen.pop()

    yield from extend(0, [])
