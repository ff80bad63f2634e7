"""Acceptance gate: the eight shipping criteria, one test each.

Every test prints one [PASS]/[FAIL] line (visible with pytest -s); the
assertions enforce the stated tolerances. Corpora are generated from
fixed seeds, so every run checks the identical instances.
"""

from __future__ import annotations

import json
import math
import time
from itertools import combinations

from gcdlcm import (
    CirculantGraph,
    CoverInstance,
    ProblemInstance,
    SplitMix64,
    brute_force,
    compute_basis,
    cover_to_gcd,
    cover_to_lcm,
    exact_cover,
    exponent_profile,
    gcd_set,
    generate_instance,
    is_connected_bfs,
    is_connected_gcd,
    lcm_set,
    prune_links,
    solve,
)
from helpers import exhaustive_min_cover, exhaustive_min_subset, run_cli

CORPUS_SIZE = 2000

# Greedy-vs-exact agreement rate over the two random corpora, pinned after
# the first evaluation; the corpora are seeded, so the rate is a constant.
GREEDY_MATCH_RATE = 3957 / 4000


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
    assert ok, f"{criterion}: {detail}"


def corpus(mode: str, seed_base: int):
    out = []
    for i in range(CORPUS_SIZE):
        seed = seed_base + i
        count = 1 + (i * 7919) % 10  # |A| in 1..10
        b_count = (i * 104729) % 4  # |B| in 0..3
        out.append(
            generate_instance(
                seed=seed, count=count, max_value=10**4, mode=mode, b_count=b_count
            )
        )
    return out


def test_criterion_1_oracle_equivalence_gcd():
    start = time.perf_counter()
    mismatches = 0
    for inst in corpus("min-gcd", seed_base=0):
        if solve(inst, "exact").size != brute_force(inst).size:
            mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60.0
    report(
        "criterion 1 (oracle equivalence, gcd)",
        ok,
        f"{CORPUS_SIZE} instances, {mismatches} mismatches, {elapsed:.1f}s",
    )


def test_criterion_2_oracle_equivalence_lcm():
    mismatches = 0
    for inst in corpus("max-lcm", seed_base=10_000):
        if solve(inst, "exact").size != brute_force(inst).size:
            mismatches += 1
    report(
        "criterion 2 (oracle equivalence, lcm)",
        mismatches == 0,
        f"{CORPUS_SIZE} instances, {mismatches} mismatches",
    )


def test_criterion_3_basis_invariants():
    rng = SplitMix64(42)
    failures = 0
    for _ in range(CORPUS_SIZE):
        size = 1 + rng.below(12)
        values = [1 + rng.below(10**9) for _ in range(size)]
        cb = compute_basis(values)
        ok = all(p >= 2 for p in cb.basis)
        ok = ok and all(
            math.gcd(p, q) == 1 for p, q in combinations(cb.basis, 2)
        )
        ok = ok and all(cb.reconstruct(a) == a for a in cb.source)
        ok = ok and all(
            any(row[col] > 0 for row in cb.exponents)
            for col in range(len(cb.basis))
        )
        d = exponent_profile(cb, "max")
        g = exponent_profile(cb, "min")
        ok = ok and math.prod(p ** d[p] for p in cb.basis) == lcm_set(cb.source)
        ok = ok and math.prod(p ** g[p] for p in cb.basis) == gcd_set(cb.source)
        if not ok:
            failures += 1
    report(
        "criterion 3 (coprime-basis invariants)",
        failures == 0,
        f"{CORPUS_SIZE} random sets, {failures} failures",
    )


def test_criterion_4_backward_value_preservation_exhaustive():
    checked = 0
    mismatches = 0
    for n in range(1, 5):
        nonempty = [
            tuple(sorted(s))
            for size in range(1, n + 1)
            for s in combinations(range(n), size)
        ]
        for fam_size in range(1, 5):
            for family in combinations(nonempty, fam_size):
                if set(range(n)) - {e for s in family for e in s}:
                    continue  # not a covering family
                ci = CoverInstance(universe_size=n, sets=family)
                opt = exhaustive_min_cover(n, ci.sets)[0]
                lcm_img = cover_to_lcm(ci)
                gcd_img = cover_to_gcd(ci)
                lcm_opt = exhaustive_min_subset(lcm_img.elements, (), "max-lcm", nonempty=True)[0]
                gcd_opt = exhaustive_min_subset(gcd_img.elements, (), "min-gcd", nonempty=True)[0]
                if not (opt == exact_cover(ci).size == lcm_opt == gcd_opt):
                    mismatches += 1
                checked += 1
    report(
        "criterion 4 (backward reductions, exhaustive |X| <= 4)",
        checked > 0 and mismatches == 0,
        f"{checked} covering instances, {mismatches} mismatches",
    )


def test_criterion_5_greedy_guarantee_and_match_rate():
    instances = corpus("min-gcd", seed_base=0) + corpus("max-lcm", seed_base=10_000)
    bound_violations = 0
    matches = 0
    for inst in instances:
        g = solve(inst, "greedy")
        e = solve(inst, "exact")
        universe = e.stats.universe_size
        if universe >= 1 and g.size > (math.log(universe) + 1) * e.size:
            bound_violations += 1
        if g.size == e.size:
            matches += 1
    rate = matches / len(instances)
    ok = bound_violations == 0 and rate >= 0.5
    if GREEDY_MATCH_RATE is not None:
        ok = ok and abs(rate - GREEDY_MATCH_RATE) < 1e-12
    report(
        "criterion 5 (greedy harmonic bound + match rate)",
        ok,
        f"{bound_violations} bound violations, match rate {rate:.4f}"
        + (f" (pinned {GREEDY_MATCH_RATE})" if GREEDY_MATCH_RATE is not None else " (UNPINNED)"),
    )


def test_criterion_6_circulant_criterion():
    disagreements = 0
    prune_failures = 0
    checked = 0
    for m in range(1, 33):
        for size in range(0, 3):
            for links in combinations(range(1, m), size):
                g = CirculantGraph(node_count=m, links=links)
                by_gcd = is_connected_gcd(g)
                if by_gcd != is_connected_bfs(g):
                    disagreements += 1
                if by_gcd:
                    pruned = prune_links(g)
                    if not is_connected_bfs(CirculantGraph(node_count=m, links=pruned)):
                        prune_failures += 1
                checked += 1
    rng = SplitMix64(2024)
    for _ in range(1000):
        m = 2 + rng.below(10**4 - 1)
        links = tuple(1 + rng.below(2 * 10**4) for _ in range(1 + rng.below(6)))
        g = CirculantGraph(node_count=m, links=links)
        by_gcd = is_connected_gcd(g)
        if by_gcd != is_connected_bfs(g):
            disagreements += 1
        if by_gcd:
            pruned = prune_links(g)
            if not is_connected_bfs(CirculantGraph(node_count=m, links=pruned)):
                prune_failures += 1
        checked += 1
    report(
        "criterion 6 (circulant connectivity + pruning)",
        disagreements == 0 and prune_failures == 0,
        f"{checked} graphs, {disagreements} criterion disagreements, "
        f"{prune_failures} pruned graphs not connected",
    )


def test_criterion_7_worked_pins():
    pin1 = solve(ProblemInstance(a=(6, 10, 15), b=(), mode="min-gcd"))
    pin2 = solve(ProblemInstance(a=(30, 42, 70, 105), b=(), mode="min-gcd"))
    pin3 = solve(ProblemInstance(a=(4, 6, 9), b=(), mode="max-lcm"))
    ok = pin1.size == 3 and pin2.size == 4 and pin3.s == (4, 9)
    ok = ok and brute_force(ProblemInstance(a=(6, 10, 15), b=(), mode="min-gcd")).size == 3
    ok = ok and brute_force(ProblemInstance(a=(30, 42, 70, 105), b=(), mode="min-gcd")).size == 4
    ok = ok and brute_force(ProblemInstance(a=(4, 6, 9), b=(), mode="max-lcm")).s == (4, 9)
    report(
        "criterion 7 (worked pins)",
        ok,
        f"sizes {pin1.size}/{pin2.size}, max-lcm witness {pin3.s}",
    )


def test_criterion_8_cli_byte_determinism():
    invocations = [
        ("solve", "-A", "6", "10", "15"),
        ("solve", "-A", "4", "6", "9", "--mode", "max-lcm", "--method", "greedy"),
        ("solve", "-A", "30", "42", "70", "105", "--method", "brute-force"),
        ("reduce", "-A", "6", "10", "15"),
        ("basis", "-A", "360", "420", "-B", "7"),
        ("circulant", "-m", "6", "--links", "2", "3", "4"),
        ("circulant", "-m", "4", "--links", "2"),
        ("gen", "--seed", "99", "--count", "6", "--max-value", "10000", "--b-count", "3"),
    ]
    backward = json.dumps({"universe_size": 3, "sets": [[0, 1], [1, 2], [2]]})
    unstable = []
    for args in invocations:
        a = run_cli(*args)
        b = run_cli(*args)
        if (a.stdout, a.returncode) != (b.stdout, b.returncode):
            unstable.append(args)
    a = run_cli("reduce", "--direction", "backward", "--input", "-", stdin=backward)
    b = run_cli("reduce", "--direction", "backward", "--input", "-", stdin=backward)
    if (a.stdout, a.returncode) != (b.stdout, b.returncode):
        unstable.append(("reduce", "backward"))
    report(
        "criterion 8 (CLI byte determinism)",
        not unstable,
        f"{len(invocations) + 1} invocations run twice, unstable: {unstable or 'none'}",
    )
