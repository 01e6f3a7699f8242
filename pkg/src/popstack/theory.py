"""Exhaustive verifiers and counting sweeps.

Each claim checker sweeps a finite range (all of S_n, or all binary
words up to a length) and returns a VerificationReport that lists every
counterexample found; an empty failure list is a pass.  The counting
side produces exact integers: West-style pass-bounded counts, series
sortability counts, and the pass histogram over S_n.

Sweeps over S_n split into one chunk per first entry, so they can run
across worker processes; chunk results merge by addition/union and the
final output never depends on the worker count.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import factorial
from multiprocessing import Pool
from typing import Sequence

from .core import (
    MAX_ENUM_N,
    all_permutations,
    avoids,
    format_permutation,
    format_word,
    permutations_with_first,
    project,
)
from .machines import sortable_in_series, tumble_set
from .sorting import PassBoundError, flip_pass, is_west_t_sortable, passes_to_sort, pop_stack_pass

# Default size caps per verifier/sweep; each fits in seconds to about a
# minute on commodity hardware.  POPSTACK_MAX_N overrides all of them
# (bounded by the enumeration cap).
DEFAULT_CAPS = {
    "theorem": 10,
    "projection-tumble": 7,
    "flip-monotone": 14,
    "worst-tumble": 14,
    "staircase": 16,
    "histogram": 10,
    "count": 10,
    "series": 8,
}


def effective_cap(name: str) -> int:
    """Size cap for a verifier or sweep, honoring POPSTACK_MAX_N."""
    override = os.environ.get("POPSTACK_MAX_N")
    if override is not None:
        try:
            return min(int(override), MAX_ENUM_N)
        except ValueError:
            raise ValueError(f"POPSTACK_MAX_N must be an integer, got {override!r}") from None
    return DEFAULT_CAPS[name]


def _require_size(name: str, n: int, what: str = "n") -> None:
    cap = effective_cap(name)
    if not 1 <= n <= cap:
        raise ValueError(f"{what}={n} out of range 1..{cap} for {name!r}")


@dataclass
class VerificationReport:
    """Outcome of one exhaustive sweep of a claim."""

    claim: str
    scope: str
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def merge_reports(claim: str, scope: str, reports: Sequence[VerificationReport]) -> VerificationReport:
    """Combine per-size reports of the same claim into one."""
    failures: list[str] = []
    for r in reports:
        failures.extend(r.failures)
    return VerificationReport(claim, scope, sum(r.checked for r in reports), failures)


@dataclass
class CountTable:
    """Rows (n, t, machine, count) of an exact enumeration."""

    rows: list[tuple[int, int, str, int]]


def _run_jobs(worker, argslist, jobs):
    if jobs > 1 and len(argslist) > 1:
        with Pool(min(jobs, len(argslist))) as pool:
            return pool.map(worker, argslist)
    return [worker(args) for args in argslist]


def _first_entry_chunks(n, *extra):
    return [(n, first) + extra for first in range(1, n + 1)]


def _pass_count_chunk(args):
    """Histogram of pass counts over one first-entry chunk of S_n.

    Also flags any permutation needing more than n-1 passes; none can
    exist unless an operator is broken.
    """
    n, first, machine = args
    hist: Counter[int] = Counter()
    violations: list[str] = []
    bound = n - 1
    for pi in permutations_with_first(n, first):
        try:
            t = passes_to_sort(pi, machine)
        except PassBoundError:
            violations.append(f"{format_permutation(pi)} exceeded the pass cap")
            continue
        hist[t] += 1
        if t > bound:
            violations.append(f"{format_permutation(pi)} needs {t} passes")
    return hist, violations


def verify_theorem(n: int, jobs: int = 1) -> VerificationReport:
    """Check that n-1 pop-stack passes sort every permutation in S_n.

    Also confirms the bound is tight: for n >= 2 some permutation must
    need exactly n-1 passes.
    """
    _require_size("theorem", n)
    results = _run_jobs(_pass_count_chunk, _first_entry_chunks(n, "popstack"), jobs)
    hist: Counter[int] = Counter()
    failures: list[str] = []
    for h, v in results:
        hist.update(h)
        failures.extend(v)
    checked = sum(hist.values()) + len(failures)
    if n >= 2 and hist.get(n - 1, 0) == 0:
        failures.append(f"no permutation of length {n} needs {n - 1} passes")
    return VerificationReport("theorem", f"all {factorial(n)} permutations of length {n}", checked, failures)


def pass_histogram(n: int, machine: str, jobs: int = 1) -> dict[int, int]:
    """Map pass-count -> how many permutations in S_n need it."""
    _require_size("histogram", n)
    if machine not in ("stack", "popstack"):
        raise ValueError(f"machine must be 'stack' or 'popstack', got {machine!r}")
    results = _run_jobs(_pass_count_chunk, _first_entry_chunks(n, machine), jobs)
    hist: Counter[int] = Counter()
    for h, _ in results:
        hist.update(h)
    return dict(sorted(hist.items()))


def max_pass_count(n: int, machine: str = "popstack", jobs: int = 1) -> int:
    """How many permutations of length n need the maximal n-1 passes."""
    return pass_histogram(n, machine, jobs).get(n - 1, 0)


def _projection_chunk(args):
    n, first, k_values = args
    checked = 0
    failures = []
    ks = range(n + 1) if k_values is None else k_values
    for pi in permutations_with_first(n, first):
        after = pop_stack_pass(pi)
        for k in ks:
            checked += 1
            if project(after, k) not in tumble_set(project(pi, k)):
                failures.append(f"pi={format_permutation(pi)} k={k}")
    return checked, failures


def verify_projection_tumble(n: int, jobs: int = 1, k: int | None = None) -> VerificationReport:
    """Check the projection of a pop-stack pass is always a valid tumble.

    For every permutation pi in S_n and every threshold k, the 0/1
    projection of pop_stack_pass(pi) must lie in the tumble set of the
    projection of pi.  A single threshold can be pinned with k.
    """
    _require_size("projection-tumble", n)
    if k is not None and not 0 <= k <= n:
        raise ValueError(f"threshold k={k} out of range 0..{n}")
    k_values = None if k is None else (k,)
    results = _run_jobs(_projection_chunk, _first_entry_chunks(n, k_values), jobs)
    checked = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    scope = f"all permutations of length {n}, " + ("all thresholds" if k is None else f"k={k}")
    return VerificationReport("projection-tumble", scope, checked, failures)


def zero_order_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Zero-position order on binary words.

    True iff for every i, the ith zero of u occurs at or before the ith
    zero of v.  v must have at least as many zeros as u; words with the
    same zero count (the only use in the verifiers here) make the order
    a genuine partial order.
    """
    zu = [i for i, b in enumerate(u) if b == 0]
    zv = [i for i, b in enumerate(v) if b == 0]
    if len(zv) < len(zu):
        raise ValueError(f"{format_word(v)} has fewer zeros than {format_word(u)}")
    return all(a <= b for a, b in zip(zu, zv))


def _words_by_zero_count(length: int) -> dict[int, list[Word]]:
    groups: dict[int, list[Word]] = {}
    for bits in product((0, 1), repeat=length):
        groups.setdefault(bits.count(0), []).append(bits)
    return groups


def verify_flip_monotone(max_len: int) -> VerificationReport:
    """Check flipping preserves the zero-position order.

    For every pair of equal-length, equal-zero-count words with u below
    v, the flipped images must stay in order.
    """
    _require_size("flip-monotone", max_len, "max_len")
    checked = 0
    failures = []
    for length in range(1, max_len + 1):
        for group in _words_by_zero_count(length).values():
            flipped = {w: flip_pass(w) for w in group}
            for u in group:
                for v in group:
                    if zero_order_leq(u, v):
                        checked += 1
                        if not zero_order_leq(flipped[u], flipped[v]):
                            failures.append(f"u={format_word(u)} v={format_word(v)}")
    return VerificationReport(
        "flip-monotone", f"all comparable pairs of length <= {max_len}", checked, failures
    )


def verify_worst_tumble(max_len: int) -> VerificationReport:
    """Check the flip is the zero-position-worst tumble.

    For every word w, flip_pass(w) must itself be a tumble output, and
    every tumble output must sit at or below it in the order.
    """
    _require_size("worst-tumble", max_len, "max_len")
    checked = 0
    failures = []
    for length in range(1, max_len + 1):
        for w in product((0, 1), repeat=length):
            flipped = flip_pass(w)
            outputs = tumble_set(w)
            checked += 1
            if flipped not in outputs:
                failures.append(f"w={format_word(w)} flip not a tumble output")
            for u in outputs:
                checked += 1
                if not zero_order_leq(u, flipped):
                    failures.append(f"w={format_word(w)} u={format_word(u)}")
    return VerificationReport("worst-tumble", f"all words of length <= {max_len}", checked, failures)


def staircase_flip_count(a: int, b: int) -> int:
    """Flip passes needed to sort b ones followed by a zeros.

    Always equals a + b - 1: the rightmost zero idles for a - 1 passes,
    then walks b positions left.
    """
    if a < 1 or b < 1:
        raise ValueError(f"need a >= 1 and b >= 1, got a={a} b={b}")
    return passes_to_sort((1,) * b + (0,) * a, "flip")


def verify_staircase(max_ab: int) -> VerificationReport:
    """Check the a+b-1 flip count on every block word up to max_ab."""
    _require_size("staircase", max_ab, "max_ab")
    checked = 0
    failures = []
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            checked += 1
            got = staircase_flip_count(a, b)
            if got != a + b - 1:
                failures.append(f"a={a} b={b} took {got} flips")
    return VerificationReport("staircase", f"all 1 <= a, b <= {max_ab}", checked, failures)


def _west_count_chunk(args):
    n, first, t, machine = args
    return sum(1 for pi in permutations_with_first(n, first) if is_west_t_sortable(pi, t, machine))


def count_west_t(n: int, t: int, machine: str, jobs: int = 1) -> int:
    """How many permutations of length n are sorted by t canonical passes."""
    if t < 0:
        raise ValueError(f"pass count must be >= 0, got {t}")
    if machine not in ("stack", "popstack"):
        raise ValueError(f"machine must be 'stack' or 'popstack', got {machine!r}")
    if n == 0:
        return 1
    _require_size("count", n)
    return sum(_run_jobs(_west_count_chunk, _first_entry_chunks(n, t, machine), jobs))


def west2_formula(n: int) -> int:
    """Exact value of 2*(3n)! / ((n+1)! * (2n+1)!).

    Counts the permutations of length n sorted by two canonical stack
    passes; evaluated in exact integer arithmetic.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    numerator = 2 * factorial(3 * n)
    denominator = factorial(n + 1) * factorial(2 * n + 1)
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, "the count formula always divides evenly"
    return quotient


def _series_count_chunk(args):
    n, first, t, machine = args
    return sum(1 for pi in permutations_with_first(n, first) if sortable_in_series(pi, machine, t))


def count_series_sortable(n: int, t: int, machine: str, jobs: int = 1) -> int:
    """How many permutations of length n can t buffered nondeterministic devices sort."""
    if t < 0:
        raise ValueError(f"pass count must be >= 0, got {t}")
    if machine not in ("stack", "popstack"):
        raise ValueError(f"machine must be 'stack' or 'popstack', got {machine!r}")
    if n == 0:
        return 1
    _require_size("series", n)
    return sum(_run_jobs(_series_count_chunk, _first_entry_chunks(n, t, machine), jobs))


def is_pop_stacked(pi: Sequence[int]) -> bool:
    """True iff pi is the pop-stack image of some permutation.

    Brute-force preimage search over all of S_n.
    """
    pi = tuple(pi)
    n = len(pi)
    if n == 0:
        return True
    _require_size("series", n)
    return any(pop_stack_pass(sigma) == pi for sigma in all_permutations(n))


def count_table(
    max_n: int, t: int, machine: str, series: bool = False, jobs: int = 1
) -> CountTable:
    """Counts for every length 1..max_n at a fixed pass budget."""
    counter = count_series_sortable if series else count_west_t
    rows = [(n, t, machine, counter(n, t, machine, jobs)) for n in range(1, max_n + 1)]
    return CountTable(rows)


# Pattern-avoidance characterizations of single-pass sortability; kept
# here as the independent oracle route against the sorting route.

def stack_sortable_by_pattern(pi: Sequence[int]) -> bool:
    """One stack pass sorts pi iff pi avoids 231."""
    return avoids(pi, (2, 3, 1))


def pop_stack_sortable_by_pattern(pi: Sequence[int]) -> bool:
    """One pop-stack pass sorts pi iff pi avoids both 231 and 312."""
    return avoids(pi, (2, 3, 1), (3, 1, 2))
