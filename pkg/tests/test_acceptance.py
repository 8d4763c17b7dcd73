"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
All comparisons are exact.
"""

import io
import random
import time
from fractions import Fraction as F
from itertools import permutations
from pathlib import Path

import pytest

from simplegames.axioms import (SOLUTIONS, CoalitionBijection, LargerFamily, apply_bijection,
                                check_amwc, check_dm, check_ilmwc, extend_with_larger,
                                sample_amwc_instance, sample_ilmwc_instance)
from simplegames.cli import main
from simplegames.core import SetFamily, brute_dual, dual, min_sets, minimal_blocking
from simplegames.desirability import PairRelation, desirability_matrix, weakly_desirable_brute
from simplegames.rankings import criticality_ranking, dpi, lpgr, pgi, theta, theta_star

from conftest import labelled, oracle_dual_mwc, sets1

EXAMPLE1 = Path(__file__).parent / "data" / "example1.json"
SAMPLE_SEED = 20240101
SAMPLES = 200


def verdict(number: int, title: str, checks: list[tuple[str, bool]]) -> None:
    failed = [name for name, ok in checks if not ok]
    status = "PASS" if not failed else "FAIL"
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks"
    if failed:
        detail += "; failed: " + ", ".join(failed)
    print(f"\ncriterion {number} {status}: {title} ({detail})")
    assert not failed, failed


def m1(s: str) -> int:
    return sum(1 << (int(c) - 1) for c in s)


# ---------------------------------------------------------------- 1-3: worked examples

def test_criterion_1_example1(example1):
    thetas = {1: (0, 2, 1, 0, 0), 2: (0, 1, 1, 0, 0), 3: (0, 2, 0, 0, 0),
              4: (0, 1, 2, 0, 0), 5: (0, 0, 2, 0, 0)}
    checks = [
        ("PGI", pgi(example1) == [F(3, 12), F(2, 12), F(2, 12), F(3, 12), F(2, 12)]),
        ("DPI", dpi(example1) == [F(8, 36), F(5, 36), F(6, 36), F(7, 36), F(4, 36)]),
        ("theta", all(theta(example1, p - 1).counts == t for p, t in thetas.items())),
        ("LPGR", lpgr(example1).render() == "1 > 3 > 4 > 2 > 5"),
    ]
    verdict(1, "Example 1 indices, theta vectors and LPGR", checks)


def test_criterion_2_blocking_example(example1):
    printed = {1: (0, 1, 1, 0, 0), 2: (0, 0, 2, 0, 0), 3: (0, 0, 3, 0, 0),
               4: (0, 1, 1, 0, 0), 5: (0, 0, 2, 0, 0)}
    checks = [
        ("blocking family", labelled(minimal_blocking(example1)) ==
         sets1("14", "135", "234", "235")),
        ("theta*", all(theta_star(example1, p - 1).counts == t for p, t in printed.items())),
        ("criticality", criticality_ranking(example1).render() == "1 = 4 > 3 > 2 = 5"),
    ]
    verdict(2, "Example 1 blocking family, theta* and criticality ranking", checks)


def test_criterion_3_weighted(weighted_41111):
    g = weighted_41111
    m = desirability_matrix(g)
    h, d = pgi(g), dpi(g)
    checks = [
        ("MWC family", labelled(g.mwc) == sets1("12", "134", "135", "145")),
        ("1 > 2", m[0, 1] is PairRelation.STRICTLY_MORE),
        ("2 > 3", m[1, 2] is PairRelation.STRICTLY_MORE),
        ("3 ~ 4 ~ 5", all(m[a, b] is PairRelation.EQUIVALENT
                          for a, b in permutations((2, 3, 4), 2))),
        ("PGI witness", h[1] == F(1, 11) and h[2] == F(2, 11) and h[1] < h[2]),
        ("DPI witness", d[1] == F(1, 8) and d[2] == F(1, 6) and d[1] < d[2]),
        ("LPGR", lpgr(g).render() == "1 > 2 > 3 = 4 = 5"),
        ("criticality", criticality_ranking(g).render() == "1 > 2 > 3 = 4 = 5"),
    ]
    verdict(3, "weighted game (4,2,1,1,1) q=6", checks)


# ---------------------------------------------------------------- 4-6: corpus properties

def test_criterion_4_duality(corpus):
    start = time.perf_counter()
    bad_rank = bad_inv = bad_brute = 0
    for g, _ in corpus:
        d = dual(g)
        bad_rank += lpgr(g) != criticality_ranking(d)
        bad_inv += dual(d) != g
        bad_brute += d.mwc != brute_dual(g) or labelled(d.mwc) != {
            frozenset(p + 1 for p in s) for s in oracle_dual_mwc(g)}
    elapsed = time.perf_counter() - start
    sizes = {g.n for g, _ in corpus}
    kinds = {wg is None for _, wg in corpus}
    checks = [
        ("corpus shape", len(corpus) == 500 and sizes == set(range(3, 9)) and kinds == {True, False}),
        (f"lpgr = criticality of dual ({bad_rank} bad)", bad_rank == 0),
        (f"dual involution ({bad_inv} bad)", bad_inv == 0),
        (f"dual matches brute force ({bad_brute} bad)", bad_brute == 0),
        (f"runtime {elapsed:.1f}s < 60s", elapsed < 60),
    ]
    verdict(4, "duality on 500 random games", checks)


def test_criterion_5_desirable_monotonicity(corpus):
    bad_eq = bad_strict = bad_oracle = pairs = 0
    for g, _ in corpus:
        m, r = desirability_matrix(g), lpgr(g)
        for i, j in permutations(range(g.n), 2):
            pairs += 1
            rel = m[i, j]
            if rel is PairRelation.EQUIVALENT:
                bad_eq += not r.indifferent(i, j)
            elif rel is PairRelation.STRICTLY_MORE:
                bad_strict += not r.strictly_above(i, j)
            fast = rel in (PairRelation.STRICTLY_MORE, PairRelation.EQUIVALENT)
            bad_oracle += fast != weakly_desirable_brute(g, i, j)
    checks = [
        (f"~ pairs share a class ({bad_eq} bad)", bad_eq == 0),
        (f"> pairs strictly ordered ({bad_strict} bad)", bad_strict == 0),
        (f"fast check equals brute force on {pairs} pairs ({bad_oracle} bad)", bad_oracle == 0),
    ]
    verdict(5, "desirable monotonicity on the corpus", checks)


def test_criterion_6_totality(corpus):
    totals = bad_total = bad_weighted_total = bad_weight_order = 0
    for g, wg in corpus:
        total = desirability_matrix(g).is_total()
        r = lpgr(g)
        if total:
            totals += 1
            bad_total += r != criticality_ranking(g)
        if wg is not None:
            bad_weighted_total += not total
            for i, j in permutations(range(g.n), 2):
                if wg.weights[i] >= wg.weights[j]:
                    bad_weight_order += not r.weakly_above(i, j)
    checks = [
        (f"total games have lpgr = criticality ({totals} total, {bad_total} bad)",
         bad_total == 0),
        (f"weighted games are total ({bad_weighted_total} bad)", bad_weighted_total == 0),
        (f"weights respected ({bad_weight_order} bad)", bad_weight_order == 0),
    ]
    verdict(6, "totality corollary on the corpus", checks)


# ---------------------------------------------------------------- 7: axiom independence

@pytest.fixture(scope="module")
def suites(corpus):
    """200 AMWC and 200 ILMWC instances drawn from the corpus with a fixed seed."""
    rng = random.Random(SAMPLE_SEED)
    amwc, ilmwc = [], []
    k = 0
    while len(amwc) < SAMPLES or len(ilmwc) < SAMPLES:
        g = corpus[k % len(corpus)][0]
        k += 1
        if len(amwc) < SAMPLES:
            inst = sample_amwc_instance(g, rng)
            if inst is not None:
                amwc.append(inst)
        if len(ilmwc) < SAMPLES:
            inst = sample_ilmwc_instance(g, rng)
            if inst is not None:
                ilmwc.append(inst)
    return amwc, ilmwc


def _suite_failures(solution, corpus, suites):
    amwc, ilmwc = suites
    dm = sum(bool(check_dm(solution, g)) for g, _ in corpus)
    am = sum(not check_amwc(solution, x.game, x.i, x.j, x.pi) for x in amwc)
    il = sum(not check_ilmwc(solution, x.game, a, b, x.fam)
             for x in ilmwc for a, b in ((x.i, x.j), (x.j, x.i)))
    return dm, am, il


def test_criterion_7_axiom_independence(corpus, suites, weighted_41111):
    checks = []
    fails = {name: _suite_failures(SOLUTIONS[name], corpus, suites)
             for name in ("lpgr", "r_dm", "r_amwc", "r_ilmwc")}

    dm, am, il = fails["lpgr"]
    checks.append((f"lpgr passes all suites (dm {dm}, amwc {am}, ilmwc {il})",
                   dm == am == il == 0))

    dm, am, il = fails["r_dm"]
    checks.append((f"r_dm fails DM on the corpus ({dm} games)", dm > 0))
    checks.append((f"r_dm passes AMWC and ILMWC samples (amwc {am}, ilmwc {il})",
                   am == il == 0))

    # players 3 and 4 with pi({1,5}) = {2,5}
    v = weighted_41111
    pi = CoalitionBijection(5, 2, 3, {m1("15"): m1("25")})
    vp = apply_bijection(v, 2, 3, pi)
    r_amwc = SOLUTIONS["r_amwc"]
    dm, am, il = fails["r_amwc"]
    checks.append(("r_amwc: 3 I 4 in v and 4 P 3 in v_pi",
                   r_amwc(v).indifferent(2, 3) and r_amwc(vp).strictly_above(3, 2)
                   and not check_amwc(r_amwc, v, 2, 3, pi)))
    checks.append((f"r_amwc passes DM and ILMWC suites (dm {dm}, ilmwc {il})", dm == il == 0))

    # players 1 and 2 with {2,3,4,5} added above h = 3
    fam = LargerFamily(SetFamily.build(5, [m1("2345")]), h=3)
    vq = extend_with_larger(v, 0, 1, fam)
    r_ilmwc = SOLUTIONS["r_ilmwc"]
    dm, am, il = fails["r_ilmwc"]
    checks.append(("r_ilmwc: 1 P 2 in v and 2 P 1 in v'",
                   r_ilmwc(v).strictly_above(0, 1) and r_ilmwc(vq).strictly_above(1, 0)
                   and not check_ilmwc(r_ilmwc, v, 0, 1, fam)))
    checks.append((f"r_ilmwc passes DM and AMWC suites (dm {dm}, amwc {am})", dm == am == 0))

    verdict(7, "axiom independence pattern", checks)


# ---------------------------------------------------------------- 8: normalization

def _no_nested(masks) -> bool:
    sets = [frozenset(p for p in range(64) if m >> p & 1) for m in masks]
    return not any(a < b for a in sets for b in sets)


def test_criterion_8_normalization_and_antichains(corpus):
    rng = random.Random(8)
    bad_sum = bad_chain = families = 0
    for g, _ in corpus:
        bad_sum += sum(pgi(g)) != 1 or sum(dpi(g)) != 1
        raw = [rng.randrange(1, 1 << g.n) for _ in range(rng.randint(1, 12))]
        for fam in (g.mwc, minimal_blocking(g), dual(g).mwc, min_sets(raw, g.n)):
            assert isinstance(fam, SetFamily)
            if fam.antichain:
                families += 1
                bad_chain += not _no_nested(fam.masks)
    checks = [
        (f"PGI and DPI sum to 1 ({bad_sum} bad)", bad_sum == 0),
        (f"{families} antichain families nest-free ({bad_chain} bad)", bad_chain == 0),
    ]
    verdict(8, "normalization and antichain flags", checks)


# ---------------------------------------------------------------- 9: CLI

def _cli(*argv) -> tuple[int, str]:
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def test_criterion_9_cli_determinism(tmp_path):
    first, second = _cli("analyze", str(EXAMPLE1)), _cli("analyze", str(EXAMPLE1))
    code, once = _cli("dual", str(EXAMPLE1))
    path = tmp_path / "dual.json"
    path.write_text(once)
    code2, twice = _cli("dual", str(path))
    checks = [
        ("analyze exits 0", first[0] == 0),
        ("analyze byte-identical", first == second),
        ("dual twice restores the document", code == code2 == 0
         and twice.encode() == EXAMPLE1.read_bytes()),
    ]
    verdict(9, "CLI determinism and dual round trip", checks)

