"""Command-line front end.

Exit codes: 0 ok, 1 axiom violation found, 2 usage or size-cap error,
3 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from .axioms import SOLUTIONS, AxiomAudit, audit
from .core import ENUMERATION_CAP, GameError, dual, minimal_blocking, players_of
from .document import (AnalysisReport, GameDocument, ParseError, document_from_game,
                       parse_game, serialize_game)
from .desirability import desirability_matrix
from .rankings import RANKERS, Ranking

FORCE_ENV = "SIMPLEGAMES_FORCE"

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class CapExceeded(Exception):
    pass


def _check_cap(doc: GameDocument, force: bool) -> None:
    if doc.n > ENUMERATION_CAP and not force:
        raise CapExceeded(
            f"game has {doc.n} players, above the enumeration cap of {ENUMERATION_CAP}; "
            f"use --force or set {FORCE_ENV}=1")


def cmd_analyze(doc: GameDocument, force: bool = False) -> AnalysisReport:
    _check_cap(doc, force)
    return AnalysisReport.build(doc, force=True)


def cmd_rank(doc: GameDocument, method: str, force: bool = False) -> Ranking:
    _check_cap(doc, force)
    return RANKERS[method](doc.game(force=True))


def cmd_dual(doc: GameDocument, force: bool = False) -> GameDocument:
    _check_cap(doc, force)
    return document_from_game(dual(doc.game(force=True), force=True), doc.players)


@dataclass
class AxiomsResult:
    audit: AxiomAudit
    doc: GameDocument
    trials: int
    seed: int

    def _pair(self, i: int, j: int) -> str:
        return f"({self.doc.label(i)},{self.doc.label(j)})"

    def to_dict(self) -> dict:
        a = self.audit
        return {
            "solution": a.solution,
            "seed": self.seed,
            "trials": self.trials,
            "dm": {"violations": [{"pair": [self.doc.label(v.i), self.doc.label(v.j)],
                                   "relation": v.relation.value, "reason": v.reason}
                                  for v in a.dm_violations]},
            "amwc": {"checked": a.amwc_checked,
                     "failures": [{"pair": [self.doc.label(x.i), self.doc.label(x.j)],
                                   "mapping": [[[p + 1 for p in players_of(s)],
                                                [p + 1 for p in players_of(t)]]
                                               for s, t in sorted(x.pi.mapping.items())]}
                                  for x in a.amwc_failures]},
            "ilmwc": {"checked": a.ilmwc_checked,
                      "failures": [{"pair": [self.doc.label(i), self.doc.label(j)],
                                    "added": [[p + 1 for p in players_of(m)]
                                              for m in x.fam.family.masks]}
                                   for x, i, j in a.ilmwc_failures]},
            "ok": a.ok,
        }

    def to_table(self) -> str:
        a = self.audit
        lines = [f"solution: {a.solution}  seed: {self.seed}  trials: {self.trials}"]
        if a.dm_violations:
            lines.append(f"DM     FAIL  {len(a.dm_violations)} violation(s)")
            for v in a.dm_violations:
                lines.append(f"  {self._pair(v.i, v.j)} {v.relation.value}: {v.reason}")
        else:
            lines.append("DM     pass")
        lines.append(f"AMWC   {'FAIL' if a.amwc_failures else 'pass'}  "
                     f"{len(a.amwc_failures)}/{a.amwc_checked} sampled instances failed")
        for x in a.amwc_failures:
            lines.append(f"  pair {self._pair(x.i, x.j)}")
        lines.append(f"ILMWC  {'FAIL' if a.ilmwc_failures else 'pass'}  "
                     f"{len(a.ilmwc_failures)}/{a.ilmwc_checked} sampled checks failed")
        for x, i, j in a.ilmwc_failures:
            lines.append(f"  pair {self._pair(i, j)}")
        return "\n".join(lines) + "\n"


def cmd_axioms(doc: GameDocument, solution: str, seed: int = 0, trials: int = 20,
               force: bool = False) -> AxiomsResult:
    _check_cap(doc, force)
    result = audit(SOLUTIONS[solution], doc.game(force=True), trials, random.Random(seed))
    return AxiomsResult(result, doc, trials, seed)


# ---------------------------------------------------------------- argparse

def _family_lines(doc: GameDocument, fam) -> str:
    return "".join("{" + ",".join(doc.label(p) for p in players_of(m)) + "}\n" for m in fam.masks)


def _family_json(doc: GameDocument, fam) -> str:
    return json.dumps([[doc.label(p) for p in players_of(m)] for m in fam.masks]) + "\n"


def _load(args) -> GameDocument:
    if args.weights is not None or args.quota is not None:
        if args.file is not None:
            raise argparse.ArgumentTypeError("give either a file or --weights/--quota, not both")
        if args.weights is None or args.quota is None:
            raise argparse.ArgumentTypeError("--weights and --quota must be used together")
        weights = [w.strip() for w in args.weights.split(",")]
        text = json.dumps({"players": len(weights), "kind": "weighted",
                           "weights": [_shortcut(w) for w in weights],
                           "quota": _shortcut(args.quota)})
        return parse_game(text)
    if args.file is None:
        raise argparse.ArgumentTypeError("a game file (or '-' for stdin) is required")
    if args.file == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.file, "rb") as fh:
            data = fh.read()
    return parse_game(data)


def _shortcut(token: str):
    try:
        return int(token)
    except ValueError:
        return token


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplegames",
        description="Analyze simple games: minimal winning/blocking coalitions, "
                    "desirability, PGI/DPI and lexicographic rankings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", nargs="?", help="game document (JSON), '-' for stdin")
        p.add_argument("--weights", help="comma-separated weights instead of a file")
        p.add_argument("--quota", help="quota for --weights")
        p.add_argument("--force", action="store_true",
                       help=f"allow more than {ENUMERATION_CAP} players")
        return p

    p = add("analyze", "full report")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p = add("rank", "one ranking solution")
    p.add_argument("--method", choices=sorted(RANKERS), required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    add("dual", "dual game as an mwc document")
    for name, help_ in (("mwc", "minimal winning coalitions"),
                        ("blocking", "minimal blocking coalitions"),
                        ("desirability", "desirability matrix")):
        p = add(name, help_)
        p.add_argument("--format", choices=("table", "json"), default="table")
    p = add("axioms", "check DM, AMWC and ILMWC for a ranking solution")
    p.add_argument("--solution", choices=sorted(SOLUTIONS), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def run(args, out) -> int:
    doc = _load(args)
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    force = args.force or os.environ.get(FORCE_ENV, "") not in ("", "0")
    fmt = getattr(args, "format", "table")

    if args.command == "analyze":
        report = cmd_analyze(doc, force)
        out.write(report.to_json() if fmt == "json" else report.to_table())
    elif args.command == "rank":
        ranking = cmd_rank(doc, args.method, force)
        if fmt == "json":
            out.write(json.dumps({"method": args.method,
                                  "order": ranking.render(doc.labels),
                                  "classes": [[doc.label(p) for p in c] for c in ranking.classes]},
                                 ensure_ascii=False) + "\n")
        else:
            out.write(ranking.render(doc.labels) + "\n")
    elif args.command == "dual":
        out.write(serialize_game(cmd_dual(doc, force)))
    elif args.command in ("mwc", "blocking"):
        _check_cap(doc, force)
        game = doc.game(force=True)
        fam = game.mwc if args.command == "mwc" else minimal_blocking(game, force=True)
        out.write(_family_json(doc, fam) if fmt == "json" else _family_lines(doc, fam))
    elif args.command == "desirability":
        _check_cap(doc, force)
        report = desirability_matrix(doc.game(force=True))
        if fmt == "json":
            out.write(json.dumps({"players": [doc.label(p) for p in range(doc.n)],
                                  "matrix": ["".join(r.value for r in row) for row in report.table],
                                  "total": report.is_total()}, ensure_ascii=False) + "\n")
        else:
            for p, row in enumerate(report.table):
                out.write(f"{doc.label(p)}  {' '.join(r.value for r in row)}\n")
            out.write(f"total: {'yes' if report.is_total() else 'no'}\n")
    elif args.command == "axioms":
        if args.trials < 0:
            raise argparse.ArgumentTypeError("--trials must be non-negative")
        result = cmd_axioms(doc, args.solution, args.seed, args.trials, force)
        out.write(json.dumps(result.to_dict(), indent=2) + "\n" if fmt == "json"
                  else result.to_table())
        return EXIT_OK if result.audit.ok else EXIT_VIOLATION
    return EXIT_OK


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return run(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, argparse.ArgumentTypeError, GameError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
