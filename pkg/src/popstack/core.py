"""Permutations, binary words, and their basic structure.

Permutations are kept in one-line notation as tuples of the integers
1..n, so the word 463152 is ``(4, 6, 3, 1, 5, 2)``.  Binary words are
tuples over {0, 1}.  Both have a canonical text form: permutation
entries are separated by single spaces ("4 6 3 1 5 2") and binary words
are contiguous digit strings ("110010").  Permutations of length at
most 9 may also be written compactly as a digit string ("463152").

Everything here is an immutable value, safe to share across worker
processes without synchronization.
"""

from __future__ import annotations

from itertools import permutations as _lex_permutations
from typing import Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]

# n! streams get pointless fast; 10 is what the exhaustive sweeps need,
# the rest is headroom for experiments.
MAX_ENUM_N = 16


def is_permutation(entries: Sequence[int]) -> bool:
    """True iff the entries are exactly 1..n, each occurring once."""
    return sorted(entries) == list(range(1, len(entries) + 1))


def is_binary_word(bits: Sequence[int]) -> bool:
    """True iff every symbol is 0 or 1."""
    return all(b == 0 or b == 1 for b in bits)


def _validated(entries: Sequence[int]) -> Perm:
    pi = tuple(entries)
    n = len(pi)
    seen = set()
    for x in pi:
        if not 1 <= x <= n:
            raise ValueError(
                f"entry {x} out of range 1..{n}: a permutation of length {n} "
                f"must contain each of 1..{n} exactly once"
            )
        if x in seen:
            raise ValueError(f"duplicate entry {x}")
        seen.add(x)
    return pi


def parse_permutation(text: str) -> Perm:
    """Parse a permutation from one-line notation.

    Accepts comma- or whitespace-separated integers, or for lengths up
    to 9 a contiguous digit string.

    >>> parse_permutation("463152")
    (4, 6, 3, 1, 5, 2)
    >>> parse_permutation("4 6 3 1 5 2")
    (4, 6, 3, 1, 5, 2)
    >>> parse_permutation("10, 2, 3, 4, 5, 6, 7, 8, 9, 1")[:2]
    (10, 2)
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation")
    if "," in s:
        tokens = [t.strip() for t in s.split(",")]
    elif any(c.isspace() for c in s):
        tokens = s.split()
    elif s.isdigit():
        tokens = list(s)  # compact digit form, one entry per digit
    else:
        tokens = [s]
    try:
        entries = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    return _validated(entries)


def format_permutation(pi: Sequence[int]) -> str:
    """Canonical text form: entries separated by single spaces."""
    return " ".join(str(x) for x in pi)


def format_permutation_compact(pi: Sequence[int]) -> str:
    """Digit-string form, defined only when every entry is at most 9."""
    if any(x > 9 for x in pi):
        raise ValueError("compact form needs all entries <= 9")
    return "".join(str(x) for x in pi)


def parse_word(text: str) -> Word:
    """Parse a binary word from a contiguous 0/1 string."""
    s = text.strip()
    if not s:
        raise ValueError("empty binary word")
    if any(c not in "01" for c in s):
        raise ValueError(f"malformed binary word {text!r}")
    return tuple(int(c) for c in s)


def format_word(w: Sequence[int]) -> str:
    """Contiguous 0/1 string."""
    return "".join(str(b) for b in w)


def identity(n: int) -> Perm:
    """The sorted permutation 1 2 ... n."""
    return tuple(range(1, n + 1))


def is_identity(pi: Sequence[int]) -> bool:
    """True iff the entries are 1, 2, ..., n in order."""
    return all(x == i for i, x in enumerate(pi, start=1))


def decreasing_runs(pi: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal strictly decreasing contiguous runs, as half-open spans.

    The spans partition range(len(pi)) from left to right; within each
    span the entries strictly decrease, and no span can be extended.

    >>> decreasing_runs((4, 6, 3, 1, 5, 2))
    [(0, 1), (1, 4), (4, 6)]
    >>> decreasing_runs((3, 2, 1))
    [(0, 3)]
    """
    runs = []
    i = 0
    n = len(pi)
    while i < n:
        j = i + 1
        while j < n and pi[j] < pi[j - 1]:
            j += 1
        runs.append((i, j))
        i = j
    return runs


def project(pi: Sequence[int], k: int) -> Word:
    """Binary word marking entries >= k with 1 and entries < k with 0.

    >>> format_word(project((4, 6, 3, 1, 5, 2), 3))
    '110010'
    """
    if not 0 <= k <= len(pi):
        raise ValueError(f"threshold k={k} out of range 0..{len(pi)}")
    return tuple(0 if x < k else 1 for x in pi)


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True iff some subsequence of pi is order-isomorphic to sigma.

    Backtracking scan over candidate positions; fine for the short
    patterns this library needs (231, 312, and test patterns).
    """
    n = len(pi)
    m = len(sigma)
    if m == 0:
        return True
    if m > n:
        return False

    def extend(start: int, chosen: tuple[int, ...]) -> bool:
        j = len(chosen)
        if j == m:
            return True
        for i in range(start, n - (m - j) + 1):
            x = pi[i]
            if all((c < x) == (sigma[idx] < sigma[j]) for idx, c in enumerate(chosen)):
                if extend(i + 1, chosen + (x,)):
                    return True
        return False

    return extend(0, ())


def avoids(pi: Sequence[int], *patterns: Sequence[int]) -> bool:
    """True iff pi contains none of the given patterns."""
    return not any(contains(pi, sigma) for sigma in patterns)


def all_permutations(n: int) -> Iterator[Perm]:
    """Yield the n! permutations of 1..n in lexicographic order."""
    if not 0 <= n <= MAX_ENUM_N:
        raise ValueError(f"length {n} outside supported range 0..{MAX_ENUM_N}")
    return iter(_lex_permutations(range(1, n + 1)))


def permutations_with_first(n: int, first: int) -> Iterator[Perm]:
    """The sub-stream of all_permutations(n) whose entries start with `first`.

    Concatenating the streams for first = 1..n reproduces
    all_permutations(n) exactly, which is what lets exhaustive sweeps
    split S_n across workers.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"length {n} outside supported range 1..{MAX_ENUM_N}")
    if not 1 <= first <= n:
        raise ValueError(f"first entry {first} out of range 1..{n}")
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in _lex_permutations(rest):
        yield (first,) + tail
