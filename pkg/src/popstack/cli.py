"""Command-line front end.

Subcommands: sort, trace, reach, verify, count, histogram.  Exit codes:
0 on success (and on a verify pass), 1 when verify finds a
counterexample, 2 on usage or parse errors.

Permutation operands accept delimited or (for length <= 9) compact
digit form; text output echoes whichever form the operand used.  Binary
word operands are contiguous 0/1 strings.  JSON output always uses the
canonical space-separated form for permutations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import theory
from .core import (
    format_permutation,
    format_permutation_compact,
    format_word,
    parse_permutation,
    parse_word,
)
from .machines import reach
from .sorting import iterate, passes_to_sort
from .theory import CountTable, VerificationReport

DETERMINISTIC_MACHINES = ("stack", "popstack", "flip")
NONDETERMINISTIC_MACHINES = ("stack", "popstack", "tumble")

# Default sweep sizes per verify claim; the hard caps live in theory.
DEFAULT_VERIFY_N = {
    "theorem": 8,
    "projection-tumble": 6,
    "flip-monotone": 10,
    "worst-tumble": 12,
    "staircase": 12,
}


@dataclass
class Histogram:
    n: int
    machine: str
    counts: dict[int, int]


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _canonical_state(state: tuple[int, ...]) -> str:
    if all(b in (0, 1) for b in state):
        return format_word(state)
    return format_permutation(state)


def emit(payload, fmt: str, state_text: Callable[[tuple[int, ...]], str] | None = None) -> str:
    """Serialize a report, count table, trace (list), or reach set (set)."""
    render = state_text or _canonical_state
    if isinstance(payload, VerificationReport):
        if fmt == "json":
            return json.dumps(
                {
                    "claim": payload.claim,
                    "scope": payload.scope,
                    "checked": payload.checked,
                    "failures": payload.failures,
                    "passed": payload.passed,
                },
                indent=2,
            )
        if fmt == "text":
            lines = [
                f"claim: {payload.claim}",
                f"scope: {payload.scope}",
                f"checked: {payload.checked}",
                f"failures: {len(payload.failures)}",
            ]
            lines.extend(f"counterexample: {f}" for f in payload.failures)
            lines.append(f"status: {'PASS' if payload.passed else 'FAIL'}")
            return "\n".join(lines)
    elif isinstance(payload, CountTable):
        if fmt == "csv":
            lines = ["n,t,machine,count"]
            lines.extend(f"{n},{t},{machine},{count}" for n, t, machine, count in payload.rows)
            return "\n".join(lines)
        if fmt == "json":
            return json.dumps(
                [
                    {"n": n, "t": t, "machine": machine, "count": count}
                    for n, t, machine, count in payload.rows
                ],
                indent=2,
            )
        if fmt == "text":
            return "\n".join(
                f"n={n} t={t} machine={machine} count={count}"
                for n, t, machine, count in payload.rows
            )
    elif isinstance(payload, Histogram):
        rows = sorted(payload.counts.items())
        if fmt == "csv":
            lines = ["n,passes,count"]
            lines.extend(f"{payload.n},{passes},{count}" for passes, count in rows)
            return "\n".join(lines)
        if fmt == "json":
            return json.dumps(
                [
                    {"n": payload.n, "machine": payload.machine, "passes": passes, "count": count}
                    for passes, count in rows
                ],
                indent=2,
            )
        if fmt == "text":
            return "\n".join(f"passes={passes} count={count}" for passes, count in rows)
    elif isinstance(payload, list):  # a pass trace
        if fmt == "json":
            return json.dumps({"states": [_canonical_state(s) for s in payload]}, indent=2)
        if fmt == "text":
            return "\n".join(f"{i}\t{render(s)}" for i, s in enumerate(payload))
    elif isinstance(payload, set):  # a reach set
        ordered = sorted(payload)
        if fmt == "json":
            return json.dumps(
                {"count": len(ordered), "elements": [_canonical_state(s) for s in ordered]},
                indent=2,
            )
        if fmt == "text":
            return "\n".join(render(s) for s in ordered)
    raise ValueError(f"format {fmt!r} not supported for {type(payload).__name__}")


def _parse_operand(text: str, machine: str):
    """Parse per machine type; returns (value, text renderer)."""
    if machine in ("flip", "tumble"):
        return parse_word(text), format_word
    pi = parse_permutation(text)
    if text.strip().isdigit():
        return pi, format_permutation_compact
    return pi, format_permutation


def _cmd_sort(args) -> int:
    x, render = _parse_operand(args.operand, args.machine)
    if args.passes < 0:
        raise ValueError(f"--passes must be >= 0, got {args.passes}")
    states = iterate(args.machine, x, args.passes)
    print(render(states[-1]))
    return 0


def _cmd_trace(args) -> int:
    x, render = _parse_operand(args.operand, args.machine)
    if args.passes is None:
        t = passes_to_sort(x, args.machine)
    elif args.passes < 0:
        raise ValueError(f"--passes must be >= 0, got {args.passes}")
    else:
        t = args.passes
    states = iterate(args.machine, x, t)
    print(emit(states, args.format, state_text=render))
    return 0


def _cmd_reach(args) -> int:
    x, render = _parse_operand(args.operand, args.machine)
    if args.passes < 0:
        raise ValueError(f"--passes must be >= 0, got {args.passes}")
    outputs = reach(x, args.machine, args.passes)
    if args.count_only:
        if args.format == "json":
            print(json.dumps({"count": len(outputs)}))
        else:
            print(len(outputs))
        return 0
    print(emit(outputs, args.format, state_text=render))
    return 0


def _cmd_verify(args) -> int:
    claim = args.claim
    n = args.n if args.n is not None else min(DEFAULT_VERIFY_N[claim], theory.effective_cap(claim))
    cap = theory.effective_cap(claim)
    if not 1 <= n <= cap:
        raise ValueError(f"--n must be within 1..{cap} for claim {claim!r}")
    if claim == "theorem":
        reports = [theory.verify_theorem(i, jobs=args.jobs) for i in range(1, n + 1)]
        report = theory.merge_reports(claim, f"all permutations of length <= {n}", reports)
    elif claim == "projection-tumble":
        reports = [theory.verify_projection_tumble(i, jobs=args.jobs, k=args.k) for i in range(1, n + 1)]
        scope_k = "all thresholds" if args.k is None else f"k={args.k}"
        report = theory.merge_reports(claim, f"all permutations of length <= {n}, {scope_k}", reports)
    elif claim == "flip-monotone":
        report = theory.verify_flip_monotone(n)
    elif claim == "worst-tumble":
        report = theory.verify_worst_tumble(n)
    else:
        report = theory.verify_staircase(n)
    print(emit(report, args.format))
    return 0 if report.passed else 1


def _cmd_count(args) -> int:
    cap = theory.effective_cap("series" if args.series else "count")
    if not 1 <= args.n <= cap:
        raise ValueError(f"--n must be within 1..{cap}")
    if args.passes < 0:
        raise ValueError(f"--passes must be >= 0, got {args.passes}")
    table = theory.count_table(args.n, args.passes, args.machine, series=args.series, jobs=args.jobs)
    print(emit(table, args.format))
    return 0


def _cmd_histogram(args) -> int:
    cap = theory.effective_cap("histogram")
    if not 1 <= args.n <= cap:
        raise ValueError(f"--n must be within 1..{cap}")
    counts = theory.pass_histogram(args.n, args.machine, jobs=args.jobs)
    print(emit(Histogram(args.n, args.machine, counts), args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="popstack",
        description="Sorting with stacks and pop-stacks: passes, reachability, exhaustive verification, counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="apply deterministic passes to one operand")
    p.add_argument("--machine", choices=DETERMINISTIC_MACHINES, default="popstack")
    p.add_argument("--passes", type=int, default=1, help="number of passes (default 1)")
    p.add_argument("operand", help="permutation, or 0/1 word for flip")
    p.set_defaults(handler=_cmd_sort)

    p = sub.add_parser("trace", help="print every state until sorted (or for --passes steps)")
    p.add_argument("--machine", choices=DETERMINISTIC_MACHINES, default="popstack")
    p.add_argument("--passes", type=int, default=None, help="trace exactly this many passes")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("operand", help="permutation, or 0/1 word for flip")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("reach", help="every output of t nondeterministic passes")
    p.add_argument("--machine", choices=NONDETERMINISTIC_MACHINES, default="popstack")
    p.add_argument("--passes", type=int, default=1, help="number of passes (default 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--count-only", action="store_true", help="print only the cardinality")
    p.add_argument("operand", help="permutation, or 0/1 word for tumble")
    p.set_defaults(handler=_cmd_reach)

    p = sub.add_parser("verify", help="exhaustively verify a claim; exit 1 on counterexample")
    p.add_argument("claim", choices=sorted(DEFAULT_VERIFY_N))
    p.add_argument("--n", type=int, default=None, help="sweep size (permutation or word length)")
    p.add_argument("--k", type=int, default=None, help="pin one projection threshold (projection-tumble)")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("count", help="exact sortability counts for lengths 1..n")
    p.add_argument("--machine", choices=("stack", "popstack"), default="popstack")
    p.add_argument("--passes", type=int, default=1, help="pass budget t (default 1)")
    p.add_argument("--n", type=int, required=True, help="largest length to count")
    p.add_argument("--series", action="store_true", help="count nondeterministic series sorting instead")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("histogram", help="pass-count histogram over all permutations of length n")
    p.add_argument("--machine", choices=("stack", "popstack"), default="popstack")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(handler=_cmd_histogram)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
