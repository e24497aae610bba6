"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Budgets are wall-clock ceilings from the acceptance contract, enormously
generous for this implementation; they guard against complexity
regressions, not micro-variance.
"""

import itertools
import subprocess
import sys
import time

from bispacelab.catalog import CATALOG_IDS, build_example, run_catalog
from bispacelab.finite import PointSet, enumerate_spaces
from bispacelab.suites import (
    GAP_NAMES,
    MAP_SUITES,
    SET_SUITES,
    SuiteConfig,
    find_hierarchy_witnesses,
    run_theorem_suite,
)

from helpers import compare_singleton_universe


def _announce(number: int, label: str, ok: bool, seconds: float):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] acceptance criterion {number}: {label} ({seconds:.2f}s)")
    assert ok, f"criterion {number} failed: {label}"


def test_criterion_1_catalog_fidelity():
    start = time.perf_counter()
    reports = list(run_catalog())
    elapsed = time.perf_counter() - start
    ok = (
        len(reports) == len(CATALOG_IDS)
        and all(r.passed for r in reports)
        and elapsed < 1.0
    )
    _announce(1, "all nine cataloged counterexamples reproduce every verdict", ok, elapsed)


def test_criterion_2_closure_laws_everywhere():
    start = time.perf_counter()
    ok = True
    for n in (1, 2, 3):
        for space in enumerate_spaces(n):
            subsets = [PointSet(n, m) for m in range(1 << n)]
            ok = ok and space.closure(space.empty()).is_empty
            for s in subsets:
                cl = space.closure(s)
                ok = ok and s.issubset(cl)
                ok = ok and space.closure(cl) == cl
                ok = ok and cl == s | space.limit_points(s)
            for s, t in itertools.product(subsets, repeat=2):
                ok = ok and space.closure(s | t) == space.closure(s) | space.closure(t)
                if s.issubset(t):
                    ok = ok and space.closure(s).issubset(space.closure(t))
    for entry_id in CATALOG_IDS:
        entry = build_example(entry_id)
        for bispace in filter(None, (entry.bispace, entry.target_bispace)):
            for fam in (bispace.first, bispace.second):
                sets = list(fam.algebra_sets())
                ok = ok and fam.closure(fam.empty()).is_empty
                for s in sets:
                    cl = fam.closure(s)
                    ok = ok and s.issubset(cl) and fam.closure(cl) == cl
                for s, t in itertools.product(sets, repeat=2):
                    ok = ok and fam.closure(s | t) == fam.closure(s) | fam.closure(t)
                    if s.issubset(t):
                        ok = ok and fam.closure(s).issubset(fam.closure(t))
    elapsed = time.perf_counter() - start
    _announce(
        2,
        "closure laws hold on every enumerated model and catalog universe",
        ok and elapsed < 10.0,
        elapsed,
    )


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    checks = 0
    for seed in range(50):
        checks += compare_singleton_universe(seed)
    elapsed = time.perf_counter() - start
    _announce(
        3,
        f"symbolic closed forms match finite brute force (50 seeded universes, "
        f"{checks} comparisons)",
        checks > 0 and elapsed < 30.0,
        elapsed,
    )


def test_criterion_4_set_theorem_suites_exhaustive():
    start = time.perf_counter()
    results = run_theorem_suite(SuiteConfig(n=3, which=tuple(SET_SUITES)))
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results) and elapsed < 60.0
    _announce(
        4,
        "set-level theorem suites exhaustive over all bispaces on up to 3 points",
        ok,
        elapsed,
    )


def test_criterion_5_map_theorem_suites_exhaustive():
    start = time.perf_counter()
    results = run_theorem_suite(SuiteConfig(n=3, which=tuple(MAP_SUITES)))
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in results) and elapsed < 300.0
    _announce(
        5,
        "map theorem suites exhaustive over all maps between carriers up to 3 "
        "points (nets on directed sets of up to 3 elements)",
        ok,
        elapsed,
    )


def test_criterion_6_hierarchy_strictness_fixtures():
    start = time.perf_counter()
    found = find_hierarchy_witnesses(3)
    import json
    from pathlib import Path

    frozen = json.loads(
        (Path(__file__).parent / "data" / "hierarchy_witnesses.json").read_text()
    )
    ok = set(found) == set(GAP_NAMES) and found == frozen
    ok = ok and all(found[name] is not None for name in GAP_NAMES)
    elapsed = time.perf_counter() - start
    _announce(
        6,
        "every strict hierarchy gap has a recorded finite witness fixture",
        ok,
        elapsed,
    )


def test_criterion_7_determinism_of_machine_reports():
    start = time.perf_counter()

    def run():
        return subprocess.run(
            [
                sys.executable,
                "-m",
                "bispacelab",
                "--format",
                "machine",
                "suite",
                "--n",
                "3",
                "--which",
                "all",
            ],
            capture_output=True,
            text=True,
        )

    first = run()
    second = run()
    elapsed = time.perf_counter() - start
    ok = (
        first.returncode == 0
        and second.returncode == 0
        and first.stdout == second.stdout
        and len(first.stdout) > 0
    )
    _announce(7, "consecutive full suite runs emit byte-identical machine reports", ok, elapsed)
