"""Game documents (JSON) and analysis reports.

A document is a JSON object::

    {"players": 5, "kind": "mwc", "mwc": [[1, 2], [1, 3], [3, 4]]}
    {"players": ["A", "B", "C"], "kind": "weighted", "weights": [2, 1, 1], "quota": 3}

Coalitions use 1-based player numbers even when players carry labels.
Weights and quota may be integers or exact rationals written ``"p/q"``;
rationals are scaled to a common integer denominator before evaluation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import (GameError, SimpleGame, WeightedGame, game_from_weighted, min_sets,
                   minimal_blocking, players_of, SetFamily)
from .desirability import DesirabilityMatrix, desirability_matrix
from .rankings import Ranking, criticality_ranking, dpi, lpgr, pgi, size_profiles


class ParseError(ValueError):
    """Malformed or invalid game document."""


@dataclass
class GameDocument:
    players: int | list[str]
    kind: str
    mwc: list[list[int]] | None = None
    weights: list[Fraction] | None = None
    quota: Fraction | None = None
    warnings: list[str] = field(default_factory=list, compare=False)

    @property
    def n(self) -> int:
        return self.players if isinstance(self.players, int) else len(self.players)

    @property
    def labels(self) -> list[str] | None:
        return None if isinstance(self.players, int) else list(self.players)

    def label(self, p: int) -> str:
        return str(p + 1) if isinstance(self.players, int) else self.players[p]

    def weighted_game(self) -> WeightedGame:
        if self.kind != "weighted":
            raise GameError("document does not describe a weighted game")
        scale = math.lcm(*(x.denominator for x in (*self.weights, self.quota)))
        return WeightedGame(tuple(int(w * scale) for w in self.weights), int(self.quota * scale))

    def game(self, force: bool = False) -> SimpleGame:
        if self.kind == "weighted":
            return game_from_weighted(self.weighted_game(), force=force)
        return SimpleGame.from_coalitions(self.n, [[p - 1 for p in c] for c in self.mwc])


def _fail(where: str, msg: str) -> ParseError:
    return ParseError(f"{where}: {msg}")


def _number(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise _fail(where, f"expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            pass
    raise _fail(where, f"expected an integer or 'p/q' string, got {value!r}")


def parse_game(text: bytes | str) -> GameDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise _fail("document", "top level must be an object")
    unknown = set(raw) - {"players", "kind", "mwc", "weights", "quota"}
    if unknown:
        raise _fail("document", f"unknown fields {sorted(unknown)}")

    kind = raw.get("kind")
    if kind not in ("mwc", "weighted"):
        raise _fail("kind", f"must be 'mwc' or 'weighted', got {kind!r}")

    players = raw.get("players")
    if isinstance(players, list):
        if not players or not all(isinstance(p, str) for p in players):
            raise _fail("players", "label list must be non-empty strings")
        seen = set()
        for k, p in enumerate(players):
            if p in seen:
                raise _fail(f"players[{k}]", f"duplicate label {p!r}")
            seen.add(p)
        n = len(players)
    elif isinstance(players, int) and not isinstance(players, bool) and players >= 1:
        n = players
    elif players is None and kind == "weighted" and isinstance(raw.get("weights"), list):
        players = n = len(raw["weights"])
    else:
        raise _fail("players", f"expected a positive count or a list of labels, got {players!r}")
    if n > 64:
        raise _fail("players", f"at most 64 players are supported, got {n}")

    if kind == "weighted":
        for key in ("mwc",):
            if key in raw:
                raise _fail(key, "not allowed for kind 'weighted'")
        ws = raw.get("weights")
        if not isinstance(ws, list):
            raise _fail("weights", "expected a list")
        if len(ws) != n:
            raise _fail("weights", f"expected {n} weights, got {len(ws)}")
        weights = [_number(w, f"weights[{k}]") for k, w in enumerate(ws)]
        for k, w in enumerate(weights):
            if w < 0:
                raise _fail(f"weights[{k}]", "weights must be non-negative")
        if "quota" not in raw:
            raise _fail("quota", "missing")
        quota = _number(raw["quota"], "quota")
        if quota <= 0:
            raise _fail("quota", "must be positive")
        if quota > sum(weights):
            raise _fail("quota", f"unreachable: total weight is {sum(weights)}")
        return GameDocument(players, kind, weights=weights, quota=quota)

    for key in ("weights", "quota"):
        if key in raw:
            raise _fail(key, "not allowed for kind 'mwc'")
    sets = raw.get("mwc")
    if not isinstance(sets, list) or not sets:
        raise _fail("mwc", "expected a non-empty list of coalitions")
    coalitions: list[list[int]] = []
    for k, c in enumerate(sets):
        if not isinstance(c, list):
            raise _fail(f"mwc[{k}]", "expected a list of player numbers")
        if not c:
            raise _fail(f"mwc[{k}]", "empty coalition")
        for t, p in enumerate(c):
            if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= n:
                raise _fail(f"mwc[{k}][{t}]", f"player {p!r} outside 1..{n}")
        if len(set(c)) != len(c):
            raise _fail(f"mwc[{k}]", "repeated player")
        coalitions.append(list(c))

    doc = GameDocument(players, kind, mwc=coalitions)
    masks = [sum(1 << (p - 1) for p in c) for c in coalitions]
    keep = set(min_sets(masks, n).masks)
    kept, dropped = [], []
    for c, m in zip(coalitions, masks):
        if m in keep:
            keep.discard(m)
            kept.append(c)
        else:
            dropped.append(c)
    if dropped:
        doc.mwc = kept
        doc.warnings.append(
            "removed non-minimal or duplicate coalitions: "
            + ", ".join(_braces(c) for c in dropped))
    return doc


def _braces(c) -> str:
    return "{" + ",".join(map(str, c)) + "}"


def _num_json(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else json.dumps(f"{x.numerator}/{x.denominator}")


def serialize_game(doc: GameDocument) -> str:
    """Canonical text: fixed key order, one coalition per line."""
    lines = ["{", f'  "players": {json.dumps(doc.players, ensure_ascii=False)},',
             f'  "kind": {json.dumps(doc.kind)},']
    if doc.kind == "weighted":
        lines.append(f'  "weights": [{", ".join(_num_json(w) for w in doc.weights)}],')
        lines.append(f'  "quota": {_num_json(doc.quota)}')
    else:
        lines.append('  "mwc": [')
        body = [f"    [{', '.join(map(str, c))}]" for c in doc.mwc]
        lines.append(",\n".join(body))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def document_from_game(game: SimpleGame, players: int | list[str] | None = None) -> GameDocument:
    if players is None:
        players = game.n
    return GameDocument(players, "mwc",
                        mwc=[[p + 1 for p in players_of(m)] for m in game.mwc.masks])


# ---------------------------------------------------------------- reports

def fraction_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AnalysisReport:
    doc: GameDocument
    game: SimpleGame
    blocking: SetFamily
    theta: list[tuple[int, ...]]
    theta_star: list[tuple[int, ...]]
    pgi: list[Fraction]
    dpi: list[Fraction]
    lpgr: Ranking
    criticality: Ranking
    desirability: DesirabilityMatrix

    @classmethod
    def build(cls, doc: GameDocument, force: bool = False) -> "AnalysisReport":
        game = doc.game(force=force)
        blocking = minimal_blocking(game, force=force)
        return cls(doc, game, blocking, size_profiles(game.mwc), size_profiles(blocking),
                   pgi(game), dpi(game), lpgr(game), criticality_ranking(game, blocking),
                   desirability_matrix(game))

    def _family(self, fam: SetFamily) -> list[list[str]]:
        return [[self.doc.label(p) for p in players_of(m)] for m in fam.masks]

    def _classes(self, r: Ranking) -> list[list[str]]:
        return [[self.doc.label(p) for p in c] for c in r.classes]

    def to_dict(self) -> dict:
        labels = [self.doc.label(p) for p in range(self.game.n)]
        d = self.desirability
        return {
            "game": json.loads(serialize_game(self.doc)),
            "players": labels,
            "mwc": self._family(self.game.mwc),
            "blocking": self._family(self.blocking),
            "theta": {labels[p]: list(self.theta[p]) for p in range(self.game.n)},
            "theta_star": {labels[p]: list(self.theta_star[p]) for p in range(self.game.n)},
            "pgi": {labels[p]: fraction_text(self.pgi[p]) for p in range(self.game.n)},
            "dpi": {labels[p]: fraction_text(self.dpi[p]) for p in range(self.game.n)},
            "lpgr": {"order": self.lpgr.render(self.doc.labels),
                     "classes": self._classes(self.lpgr)},
            "criticality": {"order": self.criticality.render(self.doc.labels),
                            "classes": self._classes(self.criticality)},
            "desirability": ["".join(r.value for r in row) for row in d.table],
            "total": d.is_total(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_table(self) -> str:
        n = self.game.n
        labels = [self.doc.label(p) for p in range(n)]
        fam = lambda f: " ".join("{" + ",".join(c) + "}" for c in self._family(f))
        vec = lambda v: " ".join(map(str, v))
        rows = [("player", "theta", "theta*", "PGI", "DPI")]
        for p in range(n):
            rows.append((labels[p], vec(self.theta[p]), vec(self.theta_star[p]),
                         fraction_text(self.pgi[p]), fraction_text(self.dpi[p])))
        widths = [max(len(r[c]) for r in rows) for c in range(5)]
        out = [f"players: {n}",
               f"minimal winning:  {fam(self.game.mwc)}",
               f"minimal blocking: {fam(self.blocking)}",
               ""]
        out += ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        out += ["",
                f"lpgr:        {self.lpgr.render(self.doc.labels)}",
                f"criticality: {self.criticality.render(self.doc.labels)}",
                "",
                "desirability (row vs column; > more, < less, ~ equivalent, ? incomparable):"]
        lw = max(len(x) for x in labels)
        cw = max(1, lw)
        out.append(" " * (lw + 2) + " ".join(x.rjust(cw) for x in labels))
        for p, row in enumerate(self.desirability.table):
            out.append(labels[p].rjust(lw) + "  " + " ".join(r.value.rjust(cw) for r in row))
        out.append(f"total: {'yes' if self.desirability.is_total() else 'no'}")
        return "\n".join(out) + "\n"
