"""Size profiles, PGI/DPI and the lexicographic ranking solutions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import GameError, SetFamily, SimpleGame, minimal_blocking, popcount


class Kind(enum.Enum):
    WINNING = "winning"
    BLOCKING = "blocking"


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class ThetaVector:
    """``counts[k-1]`` minimal coalitions of size ``k`` contain ``player``."""

    player: int
    counts: tuple[int, ...]
    kind: Kind = Kind.WINNING

    def reversed(self) -> tuple[int, ...]:
        return self.counts[::-1]


def size_profile(family: SetFamily, player: int) -> tuple[int, ...]:
    counts = [0] * family.n
    for m in family.containing(player):
        counts[popcount(m) - 1] += 1
    return tuple(counts)


def size_profiles(family: SetFamily) -> list[tuple[int, ...]]:
    counts = [[0] * family.n for _ in range(family.n)]
    for m in family.masks:
        k = popcount(m) - 1
        p, mm = 0, m
        while mm:
            if mm & 1:
                counts[p][k] += 1
            mm >>= 1
            p += 1
    return [tuple(c) for c in counts]


def _check_player(game: SimpleGame, i: int) -> None:
    if not 0 <= i < game.n:
        raise GameError(f"player {i} out of range for n={game.n}")


def theta(game: SimpleGame, i: int) -> ThetaVector:
    _check_player(game, i)
    return ThetaVector(i, size_profile(game.mwc, i), Kind.WINNING)


def theta_star(game: SimpleGame, i: int, blocking: SetFamily | None = None) -> ThetaVector:
    _check_player(game, i)
    if blocking is None:
        blocking = minimal_blocking(game)
    return ThetaVector(i, size_profile(blocking, i), Kind.BLOCKING)


def pgi(game: SimpleGame) -> list[Fraction]:
    """Public Good Index: MWC memberships over the total of all memberships."""
    members = [len(game.mwc.containing(i)) for i in range(game.n)]
    total = sum(members)
    return [Fraction(c, total) for c in members]


def dpi(game: SimpleGame) -> list[Fraction]:
    """Deegan-Packel index: every MWC splits a 1/|MWC| share among its members."""
    share = Fraction(1, len(game.mwc))
    out = [Fraction(0)] * game.n
    for m in game.mwc.masks:
        each = share / popcount(m)
        for i in range(game.n):
            if m >> i & 1:
                out[i] += each
    return out


def lex_compare(x: Sequence[int], y: Sequence[int]) -> Order:
    if len(x) != len(y):
        raise GameError(f"cannot compare vectors of lengths {len(x)} and {len(y)}")
    for a, b in zip(x, y):
        if a != b:
            return Order.GREATER if a > b else Order.LESS
    return Order.EQUAL


@dataclass(frozen=True)
class Ranking:
    """Total preorder as ordered indifference classes, best first.

    Players inside a class are ascending; the classes partition ``0..n-1``.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        classes = tuple(tuple(sorted(c)) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        flat = [p for c in classes for p in c]
        if any(not c for c in classes):
            raise GameError("ranking classes must be non-empty")
        if sorted(flat) != list(range(len(flat))):
            raise GameError(f"ranking classes do not partition the players: {classes}")

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def position(self, i: int) -> int:
        for k, c in enumerate(self.classes):
            if i in c:
                return k
        raise GameError(f"player {i} not ranked")

    def weakly_above(self, i: int, j: int) -> bool:
        return self.position(i) <= self.position(j)

    def strictly_above(self, i: int, j: int) -> bool:
        return self.position(i) < self.position(j)

    def indifferent(self, i: int, j: int) -> bool:
        return self.position(i) == self.position(j)

    def render(self, labels: Sequence[str] | None = None) -> str:
        name = (lambda p: str(p + 1)) if labels is None else (lambda p: labels[p])
        return " > ".join(" = ".join(name(p) for p in c) for c in self.classes)

    @classmethod
    def from_keys(cls, keys: Sequence, descending: bool = True) -> "Ranking":
        """Group players by equal key, best (largest by default) key first."""
        order = sorted(set(keys), reverse=descending)
        return cls(tuple(tuple(p for p, k in enumerate(keys) if k == key) for key in order))


def ranking_from_scores(scores: Iterable[Fraction]) -> Ranking:
    return Ranking.from_keys([Fraction(s) for s in scores])


def lpgr(game: SimpleGame) -> Ranking:
    """Lexicographic Public Good Ranking: compare MWC size profiles, small sizes first."""
    # tuple ordering on equal-length tuples is exactly the lexicographic order
    return Ranking.from_keys(size_profiles(game.mwc))


def criticality_ranking(game: SimpleGame, blocking: SetFamily | None = None) -> Ranking:
    if blocking is None:
        blocking = minimal_blocking(game)
    return Ranking.from_keys(size_profiles(blocking))


def pgi_ranking(game: SimpleGame) -> Ranking:
    return ranking_from_scores(pgi(game))


def dpi_ranking(game: SimpleGame) -> Ranking:
    return ranking_from_scores(dpi(game))


RANKERS: dict[str, Callable[[SimpleGame], Ranking]] = {
    "lpgr": lpgr,
    "criticality": criticality_ranking,
    "pgi": pgi_ranking,
    "dpi": dpi_ranking,
}
