"""Command line front end.

Subcommands: verify-catalog, enumerate, suite, check. Global --format picks
human text or machine JSON lines. Exit codes: 0 everything passed, 1 a
claim or suite violation, 2 bad input. BISPACE_LAB_THREADS caps the worker
threads used for independent entries/suites; output is identical for any
worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import CATALOG_IDS, build_example, verify_entry
from .finite import enumerate_spaces
from .reports import (
    human_report,
    human_suite,
    machine_report,
    machine_suite,
)
from .spacefile import SpaceFileError, check_user_file
from .suites import ALL_SUITES, SuiteConfig, run_theorem_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


def _workers() -> int:
    raw = os.environ.get("BISPACE_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parallel_map(fn, items: list) -> list:
    workers = _workers()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _cmd_verify_catalog(args) -> int:
    reports = _parallel_map(
        lambda i: verify_entry(build_example(i)), list(CATALOG_IDS)
    )
    failed = False
    for report in reports:
        if args.format == "machine":
            sys.stdout.write(machine_report(report))
        else:
            sys.stdout.write(human_report(report))
        failed = failed or not report.passed
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        spaces = list(enumerate_spaces(args.n))
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    for idx, space in enumerate(spaces):
        opens = [sorted(o) for o in space.opens]
        if args.format == "machine":
            sys.stdout.write(
                json.dumps(
                    {"n": args.n, "index": idx, "opens": opens},
                    sort_keys=True,
                    separators=(",", ":"),
                )
                + "\n"
            )
        else:
            rendered = " ".join("{" + ",".join(map(str, o)) + "}" for o in opens)
            sys.stdout.write(f"#{idx}: {rendered}\n")
    if args.format != "machine":
        sys.stdout.write(f"total: {len(spaces)} spaces on {args.n} points\n")
    return EXIT_OK


def _cmd_suite(args) -> int:
    which = tuple(args.which.split(",")) if args.which else ("all",)
    try:
        config = SuiteConfig(n=args.n, which=which, seed=args.seed)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if config.sampled or _workers() == 1:
        results = run_theorem_suite(config)
    else:
        results = _parallel_map(
            lambda name: run_theorem_suite(SuiteConfig(n=config.n, which=(name,)))[0],
            list(config.names()),
        )
    failed = False
    for result in results:
        if args.format == "machine":
            sys.stdout.write(machine_suite(result))
        else:
            sys.stdout.write(human_suite(result))
        failed = failed or not result.passed
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_check(args) -> int:
    try:
        report = check_user_file(args.file, args.claims)
    except SpaceFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "machine":
        sys.stdout.write(machine_report(report))
    else:
        sys.stdout.write(human_report(report))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bispace-lab",
        description="verify preopen-set structure over finite and symbolic bispaces",
    )
    parser.add_argument(
        "--format",
        choices=("text", "machine"),
        default="text",
        help="human text or machine-readable JSON lines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-catalog", help="check every cataloged counterexample")

    p_enum = sub.add_parser("enumerate", help="list all open-set structures on n points")
    p_enum.add_argument("--n", type=int, required=True, help="carrier size (1..4)")

    p_suite = sub.add_parser("suite", help="run theorem suites over enumerated models")
    p_suite.add_argument("--n", type=int, default=3, help="max carrier size (1..4)")
    p_suite.add_argument(
        "--which",
        default="all",
        help="comma-separated suite names, or 'all' (known: %s)" % ", ".join(ALL_SUITES),
    )
    p_suite.add_argument(
        "--seed", type=int, default=None, help="seed for the sampled n=4 map sweep"
    )

    p_check = sub.add_parser("check", help="verify a user-supplied space document")
    p_check.add_argument("file", help="path to the JSON space document")
    p_check.add_argument("--claims", default=None, help="extra claims file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "verify-catalog": _cmd_verify_catalog,
        "enumerate": _cmd_enumerate,
        "suite": _cmd_suite,
        "check": _cmd_check,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
