"""Ranking solutions as plug-ins and mechanical checks of the three axioms.

The axioms are desirable monotonicity (DM), anonymity of minimal winning
coalitions (AMWC) and independence of larger minimal winning coalitions
(ILMWC).  Alongside the checkers live the game transformations the last two
axioms quantify over, random instance samplers, and three solutions that
each break exactly one axiom.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple

from .core import (GameError, SetFamily, SimpleGame, canonical_key, is_antichain,
                   popcount, players_of)
from .desirability import DesirabilityMatrix, PairRelation, desirability_matrix
from .rankings import (Ranking, criticality_ranking, dpi_ranking, lpgr, pgi_ranking,
                       size_profiles)


@dataclass(frozen=True)
class RankingSolution:
    name: str
    func: Callable[[SimpleGame], Ranking]

    def __call__(self, game: SimpleGame) -> Ranking:
        return self.func(game)


# ---------------------------------------------------------------- DM

class DMViolation(NamedTuple):
    i: int
    j: int
    relation: PairRelation
    reason: str


def check_dm(solution: Callable[[SimpleGame], Ranking], game: SimpleGame,
             matrix: DesirabilityMatrix | None = None) -> list[DMViolation]:
    if matrix is None:
        matrix = desirability_matrix(game)
    ranking = solution(game)
    out = []
    for i in range(game.n):
        for j in range(game.n):
            if i == j:
                continue
            rel = matrix[i, j]
            if rel is PairRelation.EQUIVALENT and i < j and not ranking.indifferent(i, j):
                out.append(DMViolation(i, j, rel, "equivalent players ranked apart"))
            elif rel is PairRelation.STRICTLY_MORE and not ranking.strictly_above(i, j):
                out.append(DMViolation(i, j, rel, "more desirable player not ranked strictly above"))
    return out


# ---------------------------------------------------------------- AMWC

@dataclass(frozen=True)
class CoalitionBijection:
    """Size-preserving bijection on the coalitions of N \\ {i, j}.

    ``mapping`` may be partial: it must be injective, and it is completed
    canonically by closing every chain ``S -> pi(S) -> ...`` that leaves the
    domain back onto its first element.  Everything else is fixed.
    """

    n: int
    i: int
    j: int
    mapping: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.i == self.j or not (0 <= self.i < self.n and 0 <= self.j < self.n):
            raise GameError(f"invalid player pair ({self.i}, {self.j}) for n={self.n}")
        rest = ((1 << self.n) - 1) & ~(1 << self.i | 1 << self.j)
        mapping = dict(self.mapping)
        for s, t in mapping.items():
            if s & ~rest or t & ~rest:
                raise GameError("bijection must act on coalitions avoiding i and j")
            if popcount(s) != popcount(t):
                raise GameError("bijection must preserve coalition size")
        if len(set(mapping.values())) != len(mapping):
            raise GameError("bijection mapping is not injective")
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "_inverse", {t: s for s, t in mapping.items()})

    def __call__(self, s: int) -> int:
        if s in self.mapping:
            return self.mapping[s]
        if s not in self._inverse:
            return s
        while s in self._inverse:
            s = self._inverse[s]
        return s


def apply_bijection(game: SimpleGame, i: int, j: int, pi: CoalitionBijection) -> SimpleGame:
    """Relabel the partners of ``j`` through ``pi`` and keep everything else."""
    if (pi.n, pi.i, pi.j) != (game.n, i, j):
        raise GameError("bijection was built for a different game or pair")
    bi, bj = 1 << i, 1 << j
    out = []
    for m in game.mwc.masks:
        if m & bj and not m & bi:
            out.append(pi(m & ~bj) | bj)
        else:
            out.append(m)
    if len(set(out)) != len(out) or not is_antichain(out):
        raise GameError("transformed family is not an antichain")
    return SimpleGame(game.n, SetFamily(game.n, tuple(sorted(out, key=canonical_key)), True))


def _same_pair_ranking(r1: Ranking, r2: Ranking, i: int, j: int) -> bool:
    return (r1.weakly_above(i, j) == r2.weakly_above(i, j)
            and r1.weakly_above(j, i) == r2.weakly_above(j, i))


def check_amwc(solution: Callable[[SimpleGame], Ranking], game: SimpleGame,
               i: int, j: int, pi: CoalitionBijection) -> bool:
    transformed = apply_bijection(game, i, j, pi)
    return _same_pair_ranking(solution(game), solution(transformed), i, j)


# ---------------------------------------------------------------- ILMWC

def larger_threshold(game: SimpleGame, i: int, j: int) -> int:
    """Largest MWC meeting {i, j}; 0 when neither player is in any MWC."""
    pair = 1 << i | 1 << j
    return max((popcount(m) for m in game.mwc.masks if m & pair), default=0)


@dataclass(frozen=True)
class LargerFamily:
    family: SetFamily
    h: int

    def __post_init__(self):
        small = [players_of(m) for m in self.family.masks if popcount(m) <= self.h]
        if small:
            raise GameError(f"coalitions {small} are not larger than h={self.h}")


def extend_with_larger(game: SimpleGame, i: int, j: int, fam: LargerFamily) -> SimpleGame:
    h = larger_threshold(game, i, j)
    if fam.h != h:
        raise GameError(f"family threshold {fam.h} differs from the game's h={h}")
    if fam.family.n != game.n:
        raise GameError("family and game have different player counts")
    pool = set(game.mwc.masks) | set(fam.family.masks)
    for s in fam.family.masks:
        for q in pool:
            if q != s and q & s == q:
                raise GameError(f"added coalition {players_of(s)} contains {players_of(q)}")
    union = sorted(pool, key=canonical_key)
    if not is_antichain(union):
        raise GameError("extended family is not an antichain")
    return SimpleGame(game.n, SetFamily(game.n, tuple(union), True))


def check_ilmwc(solution: Callable[[SimpleGame], Ranking], game: SimpleGame,
                i: int, j: int, fam: LargerFamily) -> bool:
    extended = extend_with_larger(game, i, j, fam)
    if not solution(game).strictly_above(i, j):
        return True
    return solution(extended).strictly_above(i, j)


# ---------------------------------------------------------------- counterexamples

def r_dm_counterexample(game: SimpleGame) -> Ranking:
    """Winning singletons first, everyone else tied."""
    return Ranking.from_keys([int(game.wins(1 << i)) for i in range(game.n)])


def partner_index(game: SimpleGame, i: int) -> int:
    """Max over MWCs containing ``i`` of the smallest 1-based label among i's partners.

    Coalitions without partners contribute nothing; the result is 0 when no
    MWC with a partner contains ``i``.
    """
    best = 0
    for m in game.mwc.containing(i):
        rest = m & ~(1 << i)
        if rest:
            best = max(best, (rest & -rest).bit_length())
    return best


def _greedy_order(groups, hard, soft, tiebreak) -> Ranking:
    # hard edges must be acyclic; soft edges are honoured whenever they do
    # not conflict with each other
    remaining = list(groups)
    out = []
    while remaining:
        cands = [x for x in remaining if not any(hard(y, x) for y in remaining if y is not x)]
        pref = [x for x in cands if not any(soft(y, x) for y in remaining if y is not x)]
        pick = min(pref or cands, key=tiebreak)
        out.append(pick)
        remaining.remove(pick)
    return Ranking(tuple(out))


def r_amwc_counterexample(game: SimpleGame) -> Ranking:
    """Break profile ties between incomparable players by ``partner_index``.

    Equivalent players share a class, distinct profiles follow the LPGR, and
    within a profile the classes are ordered by partner index, then by
    smallest member.
    """
    theta = size_profiles(game.mwc)
    matrix = desirability_matrix(game)
    b = [partner_index(game, i) for i in range(game.n)]
    groups = matrix.equivalence_classes()

    def hard(x, y):
        return theta[x[0]] > theta[y[0]]

    def soft(x, y):
        return theta[x[0]] == theta[y[0]] and any(b[p] > b[q] for p in x for q in y)

    def tiebreak(x):
        return tuple(-c for c in theta[x[0]]), x[0]

    return _greedy_order(groups, hard, soft, tiebreak)


def r_ilmwc_counterexample(game: SimpleGame) -> Ranking:
    """Strict desirability first; incomparable players by reversed profile."""
    theta = size_profiles(game.mwc)
    matrix = desirability_matrix(game)
    by_theta: dict[tuple[int, ...], list[int]] = {}
    for p in range(game.n):
        by_theta.setdefault(theta[p], []).append(p)
    groups = [tuple(g) for g in by_theta.values()]

    def hard(x, y):
        return any(matrix[p, q] is PairRelation.STRICTLY_MORE for p in x for q in y)

    def soft(x, y):
        return any(matrix[p, q] is PairRelation.INCOMPARABLE for p in x for q in y) \
            and theta[x[0]][::-1] > theta[y[0]][::-1]

    def tiebreak(x):
        return tuple(-c for c in theta[x[0]]), x[0]

    return _greedy_order(groups, hard, soft, tiebreak)


SOLUTIONS: dict[str, RankingSolution] = {
    s.name: s for s in (
        RankingSolution("lpgr", lpgr),
        RankingSolution("criticality", criticality_ranking),
        RankingSolution("pgi", pgi_ranking),
        RankingSolution("dpi", dpi_ranking),
        RankingSolution("r_dm", r_dm_counterexample),
        RankingSolution("r_amwc", r_amwc_counterexample),
        RankingSolution("r_ilmwc", r_ilmwc_counterexample),
    )
}


# ---------------------------------------------------------------- sampling

@dataclass(frozen=True)
class AMWCInstance:
    game: SimpleGame
    i: int
    j: int
    pi: CoalitionBijection


@dataclass(frozen=True)
class ILMWCInstance:
    game: SimpleGame
    i: int
    j: int
    fam: LargerFamily


def _random_subset(rng: random.Random, pool: int, size: int) -> int:
    return sum(1 << p for p in rng.sample(players_of(pool), size))


def sample_amwc_instance(game: SimpleGame, rng: random.Random,
                         max_tries: int = 200) -> AMWCInstance | None:
    """Swap one partner set of ``j`` for a random equal-size set avoiding {i, j}."""
    if game.n < 3:
        return None
    for _ in range(max_tries):
        i, j = rng.sample(range(game.n), 2)
        bi, bj = 1 << i, 1 << j
        j_side = [m for m in game.mwc.masks if m & bj and not m & bi]
        if not j_side:
            continue
        s = rng.choice(j_side) & ~bj
        rest = game.grand & ~(bi | bj)
        t = _random_subset(rng, rest, popcount(s))
        if t == s:
            continue
        pi = CoalitionBijection(game.n, i, j, {s: t})
        try:
            apply_bijection(game, i, j, pi)
        except GameError:
            continue
        return AMWCInstance(game, i, j, pi)
    return None


def sample_ilmwc_instance(game: SimpleGame, rng: random.Random, max_sets: int = 2,
                          max_tries: int = 200) -> ILMWCInstance | None:
    """Add one or two random coalitions larger than h that meet {i, j}."""
    if game.n < 2:
        return None
    for _ in range(max_tries):
        i, j = rng.sample(range(game.n), 2)
        h = larger_threshold(game, i, j)
        if h >= game.n:
            continue
        chosen: list[int] = []
        for _ in range(rng.randint(1, max_sets)):
            size = rng.randint(h + 1, game.n)
            seed = rng.choice((1 << i, 1 << j, 1 << i | 1 << j))
            if popcount(seed) > size:
                seed = 1 << rng.choice((i, j))
            pool = game.grand & ~seed
            s = seed | _random_subset(rng, pool, size - popcount(seed))
            if any(m & s == m for m in game.mwc.masks):
                continue
            if any(c & s in (c, s) for c in chosen):
                continue
            chosen.append(s)
        if not chosen:
            continue
        fam = LargerFamily(SetFamily.build(game.n, chosen), h)
        try:
            extend_with_larger(game, i, j, fam)
        except GameError:
            continue
        return ILMWCInstance(game, i, j, fam)
    return None


@dataclass
class AxiomAudit:
    solution: str
    dm_violations: list[DMViolation] = field(default_factory=list)
    amwc_checked: int = 0
    amwc_failures: list[AMWCInstance] = field(default_factory=list)
    ilmwc_checked: int = 0
    ilmwc_failures: list[tuple[ILMWCInstance, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.dm_violations or self.amwc_failures or self.ilmwc_failures)


def audit(solution: RankingSolution, game: SimpleGame, trials: int,
          rng: random.Random) -> AxiomAudit:
    """DM on ``game`` plus ``trials`` sampled AMWC and ILMWC instances."""
    report = AxiomAudit(solution.name, dm_violations=check_dm(solution, game))
    for _ in range(trials):
        inst = sample_amwc_instance(game, rng)
        if inst is not None:
            report.amwc_checked += 1
            if not check_amwc(solution, game, inst.i, inst.j, inst.pi):
                report.amwc_failures.append(inst)
        inst = sample_ilmwc_instance(game, rng)
        if inst is not None:
            report.ilmwc_checked += 1
            for a, b in ((inst.i, inst.j), (inst.j, inst.i)):
                if not check_ilmwc(solution, game, a, b, inst.fam):
                    report.ilmwc_failures.append((inst, a, b))
    return report
