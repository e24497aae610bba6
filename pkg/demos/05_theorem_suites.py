#!/usr/bin/env python3
"""Theorem suites and reports: exhaustive checking over all small models.

Every structural fact the library relies on is re-proved each run by brute
force over every open-set structure on up to three points (pairs of them
for two-structure statements, all maps between them for function
statements). This demo runs a few suites, shows both report formats, and
checks a user-supplied space document.
"""

import json
import tempfile
from pathlib import Path

from bispacelab.reports import human_suite, machine_suite, parse_machine
from bispacelab.spacefile import check_user_file
from bispacelab.suites import SuiteConfig, run_theorem_suite

print("== a few suites at full exhaustiveness (carriers up to 3) ==")
config = SuiteConfig(n=3, which=("C1-iff-C2", "thm-3.3", "remark-3.1", "hierarchy"))
for result in run_theorem_suite(config):
    print(human_suite(result), end="")

print()
print("== machine format round-trips ==")
(result,) = run_theorem_suite(SuiteConfig(n=2, which=("lemma-3.1",)))
line = machine_suite(result)
print(line, end="")
print("parsed back:", parse_machine(line)[-1]["summary"])

print()
print("== checking a user-supplied space document ==")
doc = {
    "kind": "symbolic",
    "atoms": [
        {"id": "left", "cardinality": "uncountable"},
        {"id": "right", "cardinality": "uncountable"},
        {"id": "sea", "cardinality": "countable"},
    ],
    "family1": {"region": ["left"], "mandatory": []},
    "family2": {"region": ["right"], "mandatory": []},
    "sets": {"L": ["left"]},
    "claims": [
        {"predicate": "is_ij_weakly_preopen", "set": "L", "pair": [1, 2], "expected": True},
        {"predicate": "is_ij_preopen", "set": "L", "pair": [1, 2], "expected": False},
    ],
}
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "halves.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    report = check_user_file(path)
print(f"user document: {report.summary} ({len(report.outcomes)} claims)")
for outcome in report.outcomes:
    print(f"  {outcome.claim}: computed {outcome.computed}")
