"""Coalitions, set families and simple games.

Coalitions are bit masks over players ``0..n-1``.  A simple game is stored
canonically through the antichain of its minimal winning coalitions; the
winning predicate is derived from it and never tabulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_PLAYERS = 64
#: Enumeration routines refuse games larger than this unless ``force=True``.
ENUMERATION_CAP = 28


class GameError(ValueError):
    """Structurally invalid coalition, family or game."""


class EnumerationCapError(GameError):
    """An exponential enumeration was requested above the practical cap."""


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(players: Iterable[int]) -> int:
    m = 0
    for p in players:
        m |= 1 << p
    return m


def players_of(mask: int) -> tuple[int, ...]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key giving the canonical (size, numeric value) ordering."""
    return (popcount(mask), mask)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_PLAYERS:
        raise GameError(f"player count must be in 1..{MAX_PLAYERS}, got {n!r}")


def check_cap(n: int, force: bool = False) -> None:
    if n > ENUMERATION_CAP and not force:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap of {ENUMERATION_CAP}; pass force=True to override"
        )


@dataclass(frozen=True)
class Coalition:
    """A subset of ``{0, ..., n-1}`` held as a bit mask."""

    members: int
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if self.members < 0 or self.members >> self.n:
            raise GameError(f"coalition mask {self.members:#x} outside {self.n} players")

    @classmethod
    def of(cls, players: Iterable[int], n: int) -> "Coalition":
        players = list(players)
        for p in players:
            if not 0 <= p < n:
                raise GameError(f"player {p} out of range for n={n}")
        return cls(mask_of(players), n)

    @property
    def players(self) -> tuple[int, ...]:
        return players_of(self.members)

    def __len__(self) -> int:
        return popcount(self.members)

    def __contains__(self, player: int) -> bool:
        return bool(self.members >> player & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.players)

    def __repr__(self) -> str:
        return f"Coalition({{{', '.join(map(str, self.players))}}}, n={self.n})"


def _as_mask(s: Coalition | int, n: int) -> int:
    if isinstance(s, Coalition):
        if s.n != n:
            raise GameError(f"coalition over {s.n} players used with n={n}")
        return s.members
    if s < 0 or s >> n:
        raise GameError(f"coalition mask {s:#x} outside {n} players")
    return s


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of coalitions in canonical order.

    ``masks`` is always sorted by (size, numeric value).  When ``antichain``
    is set the family has been checked to be inclusion-free.
    """

    n: int
    masks: tuple[int, ...]
    antichain: bool = False

    def __post_init__(self):
        _check_n(self.n)
        limit = 1 << self.n
        for m in self.masks:
            if not 0 <= m < limit:
                raise GameError(f"coalition mask {m:#x} outside {self.n} players")
        if len(set(self.masks)) != len(self.masks):
            raise GameError("duplicate coalition in family")
        if list(self.masks) != sorted(self.masks, key=canonical_key):
            raise GameError("family masks are not in canonical order; use SetFamily.build")
        if self.antichain and not is_antichain(self.masks):
            raise GameError("family flagged as antichain contains a nested pair")

    @classmethod
    def build(cls, n: int, coalitions: Iterable[Coalition | int | Iterable[int]],
              antichain: bool = False) -> "SetFamily":
        """Canonicalize (dedupe and sort) arbitrary coalition inputs."""
        _check_n(n)
        masks = set()
        for c in coalitions:
            if isinstance(c, (Coalition, int)):
                masks.add(_as_mask(c, n))
            else:
                masks.add(Coalition.of(c, n).members)
        return cls(n, tuple(sorted(masks, key=canonical_key)), antichain)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Coalition]:
        return (Coalition(m, self.n) for m in self.masks)

    def __contains__(self, item: Coalition | int) -> bool:
        return _as_mask(item, self.n) in set(self.masks)

    def as_sets(self) -> list[tuple[int, ...]]:
        return [players_of(m) for m in self.masks]

    def containing(self, player: int) -> tuple[int, ...]:
        bit = 1 << player
        return tuple(m for m in self.masks if m & bit)


def is_antichain(masks: Sequence[int]) -> bool:
    ms = list(masks)
    for a_idx, a in enumerate(ms):
        for b in ms[a_idx + 1:]:
            if a & b in (a, b):
                return False
    return True


def _minimize(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=canonical_key)
    kept: list[int] = []
    for m in ordered:
        # anything kept so far is no larger, so only "kept ⊆ m" can occur
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def min_sets(family: SetFamily | Iterable[Coalition | int], n: int | None = None) -> SetFamily:
    """Remove every coalition that strictly contains another member."""
    if isinstance(family, SetFamily):
        n, masks = family.n, family.masks
    else:
        items = list(family)
        ns = {c.n for c in items if isinstance(c, Coalition)}
        if n is not None:
            ns.add(n)
        if len(ns) > 1:
            raise GameError(f"mixed player counts in family: {sorted(ns)}")
        if not ns:
            raise GameError("player count unknown for a family of raw masks")
        n = ns.pop()
        masks = [_as_mask(c, n) for c in items]
    return SetFamily(n, tuple(_minimize(masks)), antichain=True)


@dataclass(frozen=True)
class SimpleGame:
    """Monotone simple game given by its minimal winning coalitions."""

    n: int
    mwc: SetFamily

    def __post_init__(self):
        if self.mwc.n != self.n:
            raise GameError(f"family over {self.mwc.n} players given for n={self.n}")
        if not self.mwc.antichain:
            raise GameError("minimal winning coalitions must form a validated antichain")
        if not self.mwc.masks:
            raise GameError("a simple game needs at least one winning coalition")
        if 0 in self.mwc.masks:
            raise GameError("the empty coalition cannot be winning")

    @classmethod
    def from_coalitions(cls, n: int, coalitions: Iterable[Iterable[int] | int],
                        minimize: bool = False) -> "SimpleGame":
        fam = SetFamily.build(n, coalitions)
        if minimize:
            fam = min_sets(fam)
        else:
            fam = SetFamily(n, fam.masks, antichain=True)
        return cls(n, fam)

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def wins(self, mask: int) -> bool:
        for m in self.mwc.masks:
            if m & mask == m:
                return True
        return False

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(str(p + 1) for p in players_of(m)) + "}"
                         for m in self.mwc.masks)
        return f"SimpleGame(n={self.n}, mwc=[{sets}])"


@dataclass(frozen=True)
class WeightedGame:
    weights: tuple[int, ...]
    quota: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        _check_n(len(self.weights))
        for w in (*self.weights, self.quota):
            if not isinstance(w, int) or isinstance(w, bool):
                raise GameError(f"weights and quota must be exact integers, got {w!r}")
        if any(w < 0 for w in self.weights):
            raise GameError("weights must be non-negative")
        if self.quota <= 0:
            raise GameError("quota must be positive (the empty coalition has to lose)")
        if sum(self.weights) < self.quota:
            raise GameError(
                f"quota {self.quota} unreachable: total weight is {sum(self.weights)}"
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    def wins(self, mask: int) -> bool:
        return sum(w for p, w in enumerate(self.weights) if mask >> p & 1) >= self.quota


def is_winning(game: SimpleGame, s: Coalition | int) -> bool:
    return game.wins(_as_mask(s, game.n))


def game_from_weighted(wg: WeightedGame, force: bool = False) -> SimpleGame:
    """Minimal winning coalitions of a weighted majority game.

    Depth-first search over players in index order.  A branch is cut when
    the remaining weight cannot reach the quota, and a coalition is never
    extended once it wins, so supersets of found coalitions are skipped.
    """
    n, w, q = wg.n, wg.weights, wg.quota
    check_cap(n, force)
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] + w[p]

    found: list[int] = []
    stack = [(0, 0, 0, None)]  # (next player, mask, weight, lightest member weight)
    while stack:
        p, mask, total, lightest = stack.pop()
        if total >= q:
            # minimal iff dropping the lightest member loses
            if total - lightest < q:
                found.append(mask)
            continue
        if p == n or total + suffix[p] < q:
            continue
        stack.append((p + 1, mask, total, lightest))
        lw = w[p] if lightest is None else min(lightest, w[p])
        stack.append((p + 1, mask | 1 << p, total + w[p], lw))
    return SimpleGame(n, SetFamily(n, tuple(sorted(found, key=canonical_key)), antichain=True))


def minimal_blocking(game: SimpleGame, force: bool = False) -> SetFamily:
    """Minimal blocking coalitions, i.e. the minimal transversals of the MWCs.

    Berge's incremental scheme: the transversals of the first k edges are
    extended by one element of edge k+1 where needed and re-minimized.
    """
    check_cap(game.n, force)
    trans = [0]
    for edge in game.mwc.masks:
        nxt = set()
        bits = [1 << p for p in players_of(edge)]
        for t in trans:
            if t & edge:
                nxt.add(t)
            else:
                nxt.update(t | b for b in bits)
        trans = _minimize(nxt)
    return SetFamily(game.n, tuple(trans), antichain=True)


def dual(game: SimpleGame, force: bool = False) -> SimpleGame:
    """Dual game: S wins iff its complement loses in ``game``."""
    return SimpleGame(game.n, minimal_blocking(game, force))


# brute-force references ----------------------------------------------------

def winning_masks(game: SimpleGame | WeightedGame, force: bool = False) -> list[int]:
    check_cap(game.n, force)
    return [s for s in range(1 << game.n) if game.wins(s)]


def brute_minimal_winning(game: SimpleGame | WeightedGame, force: bool = False) -> SetFamily:
    return min_sets(winning_masks(game, force), game.n)


def brute_dual(game: SimpleGame, force: bool = False) -> SetFamily:
    """MWCs of the dual straight from v*(S) = v(N) - v(N \\ S)."""
    check_cap(game.n, force)
    full = game.grand
    return min_sets([s for s in range(1 << game.n) if not game.wins(full & ~s)], game.n)


def brute_hitting_sets(game: SimpleGame, force: bool = False) -> SetFamily:
    check_cap(game.n, force)
    edges = game.mwc.masks
    return min_sets([b for b in range(1 << game.n) if all(b & e for e in edges)], game.n)
