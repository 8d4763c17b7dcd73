"""Isbell's desirability relation between players of a simple game."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import GameError, SimpleGame, check_cap


class PairRelation(enum.Enum):
    STRICTLY_MORE = ">"
    EQUIVALENT = "~"
    STRICTLY_LESS = "<"
    INCOMPARABLE = "?"

    def flipped(self) -> "PairRelation":
        return _FLIP[self]


_FLIP = {
    PairRelation.STRICTLY_MORE: PairRelation.STRICTLY_LESS,
    PairRelation.STRICTLY_LESS: PairRelation.STRICTLY_MORE,
    PairRelation.EQUIVALENT: PairRelation.EQUIVALENT,
    PairRelation.INCOMPARABLE: PairRelation.INCOMPARABLE,
}


def _check_pair(game: SimpleGame, i: int, j: int) -> None:
    for p in (i, j):
        if not 0 <= p < game.n:
            raise GameError(f"player {p} out of range for n={game.n}")
    if i == j:
        raise GameError("desirability is only defined between distinct players")


def weakly_desirable(game: SimpleGame, i: int, j: int) -> bool:
    """True iff ``i`` is at least as desirable as ``j``.

    Only minimal winning coalitions that contain ``j`` but not ``i`` can
    witness a failure: swapping ``j`` for ``i`` in each must still win.
    """
    _check_pair(game, i, j)
    bi, bj = 1 << i, 1 << j
    for m in game.mwc.masks:
        if m & bj and not m & bi and not game.wins(m & ~bj | bi):
            return False
    return True


def weakly_desirable_brute(game: SimpleGame, i: int, j: int) -> bool:
    """Reference check over every S ⊆ N \\ {i, j}."""
    _check_pair(game, i, j)
    check_cap(game.n)
    bi, bj = 1 << i, 1 << j
    rest = game.grand & ~(bi | bj)
    s = rest
    while True:
        if game.wins(s | bj) and not game.wins(s | bi):
            return False
        if s == 0:
            return True
        s = (s - 1) & rest


def _relation(ij: bool, ji: bool) -> PairRelation:
    if ij and ji:
        return PairRelation.EQUIVALENT
    if ij:
        return PairRelation.STRICTLY_MORE
    if ji:
        return PairRelation.STRICTLY_LESS
    return PairRelation.INCOMPARABLE


def classify_pair(game: SimpleGame, i: int, j: int) -> PairRelation:
    return _relation(weakly_desirable(game, i, j), weakly_desirable(game, j, i))


@dataclass(frozen=True)
class DesirabilityMatrix:
    n: int
    table: tuple[tuple[PairRelation, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> PairRelation:
        i, j = ij
        return self.table[i][j]

    def is_total(self) -> bool:
        return all(r is not PairRelation.INCOMPARABLE for row in self.table for r in row)

    def equivalence_classes(self) -> list[tuple[int, ...]]:
        """Classes of ``~`` in order of their smallest member."""
        seen: set[int] = set()
        out = []
        for i in range(self.n):
            if i in seen:
                continue
            cls = tuple(j for j in range(i, self.n) if self.table[i][j] is PairRelation.EQUIVALENT)
            seen.update(cls)
            out.append(cls)
        return out


def desirability_matrix(game: SimpleGame, brute: bool = False) -> DesirabilityMatrix:
    weak = weakly_desirable_brute if brute else weakly_desirable
    n = game.n
    w = [[True] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                w[i][j] = weak(game, i, j)
    table = tuple(tuple(_relation(w[i][j], w[j][i]) for j in range(n)) for i in range(n))
    return DesirabilityMatrix(n, table)


def is_total(matrix: DesirabilityMatrix) -> bool:
    return matrix.is_total()
