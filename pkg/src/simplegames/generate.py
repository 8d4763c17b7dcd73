"""Random games for property suites and sampled audits."""

from __future__ import annotations

import random

from .core import SimpleGame, WeightedGame, game_from_weighted, min_sets


def random_antichain_game(rng: random.Random, n: int, max_sets: int | None = None) -> SimpleGame:
    """Minimize a handful of random non-empty coalitions."""
    if max_sets is None:
        max_sets = 2 * n
    k = rng.randint(1, max_sets)
    masks = [rng.randrange(1, 1 << n) for _ in range(k)]
    return SimpleGame(n, min_sets(masks, n))


def random_weighted(rng: random.Random, n: int, max_weight: int = 9) -> WeightedGame:
    weights = [rng.randint(0, max_weight) for _ in range(n)]
    if not any(weights):
        weights[rng.randrange(n)] = 1
    return WeightedGame(tuple(weights), rng.randint(1, sum(weights)))


def random_corpus(seed: int, size: int, n_range: tuple[int, int] = (3, 8)
                  ) -> list[tuple[SimpleGame, WeightedGame | None]]:
    """Alternate weighted and antichain games; weighted ones keep their source."""
    rng = random.Random(seed)
    out: list[tuple[SimpleGame, WeightedGame | None]] = []
    for k in range(size):
        n = rng.randint(*n_range)
        if k % 2:
            out.append((random_antichain_game(rng, n), None))
        else:
            wg = random_weighted(rng, n)
            out.append((game_from_weighted(wg), wg))
    return out
