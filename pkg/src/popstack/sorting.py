"""Deterministic single-pass sorting operators and pass counting.

Three operators, each applied one whole pass at a time:

* ``stack_pass`` -- one pass through a last-in-first-out stack under the
  greedy policy: push while the next input entry is smaller than the
  top, otherwise pop a single entry to the output.
* ``pop_stack_pass`` -- same policy, except a pop empties the entire
  stack at once (top first).
* ``flip_pass`` -- on binary words: every 10 factor becomes 01, all
  swaps applied simultaneously.

The stack and pop-stack operators also have independent reference
implementations (recursion around the maximum, and reversal of maximal
decreasing runs) kept as cross-checking oracles for the device
simulations.
"""

from __future__ import annotations

from typing import Sequence

from .core import (
    Perm,
    Word,
    decreasing_runs,
    identity,
    is_binary_word,
    is_permutation,
)

OPERATOR_NAMES = ("stack", "popstack", "flip")


class PassBoundError(RuntimeError):
    """Iterated sorting overran the proven n-1 pass bound.

    Every operator here sorts any length-n input within n-1 passes, so
    this firing means one of them is implemented wrong.
    """


def stack_pass(word: Sequence[int]) -> Perm:
    """One canonical stack pass over a word of distinct symbols.

    The largest symbol always comes out last.

    >>> stack_pass((4, 6, 3, 1, 5, 2))
    (4, 1, 3, 2, 5, 6)
    """
    out: list[int] = []
    stack: list[int] = []
    for x in word:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def stack_pass_recursive(word: Sequence[int]) -> Perm:
    """Reference implementation: sort(L max R) = sort(L) sort(R) max."""
    word = tuple(word)
    if not word:
        return ()
    i = word.index(max(word))
    return stack_pass_recursive(word[:i]) + stack_pass_recursive(word[i + 1 :]) + (word[i],)


def pop_stack_pass(word: Sequence[int]) -> Perm:
    """One canonical pop-stack pass: a pop empties the whole stack.

    >>> pop_stack_pass((4, 6, 3, 1, 5, 2))
    (4, 1, 3, 6, 2, 5)
    """
    out: list[int] = []
    stack: list[int] = []
    for x in word:
        if stack and x > stack[-1]:
            while stack:
                out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def pop_stack_pass_by_runs(word: Sequence[int]) -> Perm:
    """Reference implementation: reverse each maximal decreasing run in place."""
    word = tuple(word)
    out: list[int] = []
    for a, b in decreasing_runs(word):
        out.extend(word[a:b][::-1])
    return tuple(out)


def flip_pass(w: Sequence[int]) -> Word:
    """Swap every 10 factor of a binary word to 01, simultaneously.

    Occurrences of 10 in the input never overlap, so a left-to-right
    scan that skips past each swapped pair applies them all at once.

    >>> flip_pass((1, 1, 0, 0, 1, 0))
    (1, 0, 1, 0, 0, 1)
    """
    out = list(w)
    i = 0
    last = len(out) - 1
    while i < last:
        if out[i] == 1 and out[i + 1] == 0:
            out[i] = 0
            out[i + 1] = 1
            i += 2
        else:
            i += 1
    return tuple(out)


_OPS = {"stack": stack_pass, "popstack": pop_stack_pass, "flip": flip_pass}


def _operator(name: str):
    try:
        return _OPS[name]
    except KeyError:
        raise ValueError(f"unknown operator {name!r}; expected one of {OPERATOR_NAMES}") from None


def _check_operand(name: str, x: Sequence[int]) -> None:
    if name == "flip":
        if not is_binary_word(x):
            raise TypeError(f"operator 'flip' acts on binary words, got {tuple(x)!r}")
    elif not is_permutation(x):
        raise TypeError(f"operator {name!r} acts on permutations, got {tuple(x)!r}")


def _sorted_target(name: str, x: tuple[int, ...]) -> tuple[int, ...]:
    if name == "flip":
        return tuple(sorted(x))
    return identity(len(x))


def iterate(op: str, x: Sequence[int], t: int) -> list[tuple[int, ...]]:
    """Trace of t+1 states: x, op(x), ..., op^t(x).

    >>> iterate("popstack", (2, 3, 1), 2)
    [(2, 3, 1), (2, 1, 3), (1, 2, 3)]
    """
    if t < 0:
        raise ValueError(f"pass count must be >= 0, got {t}")
    f = _operator(op)
    _check_operand(op, x)
    states = [tuple(x)]
    for _ in range(t):
        states.append(f(states[-1]))
    return states


def passes_to_sort(x: Sequence[int], op: str) -> int:
    """Smallest t >= 0 such that t passes of the operator sort x.

    Sorted means the identity for permutations and all zeros before all
    ones for binary words.  The result is always at most n-1; the loop
    is capped one pass above that and raises PassBoundError beyond the
    cap rather than spinning.
    """
    f = _operator(op)
    _check_operand(op, x)
    cur = tuple(x)
    target = _sorted_target(op, cur)
    cap = len(cur)
    t = 0
    while cur != target:
        if t >= cap:
            raise PassBoundError(
                f"{op} did not sort {cur!r} within {cap} passes; "
                "the operator implementation is broken"
            )
        cur = f(cur)
        t += 1
    return t


def is_west_t_sortable(pi: Sequence[int], t: int, machine: str) -> bool:
    """True iff t passes of the canonical machine sort the permutation.

    Equivalent to passes_to_sort(pi, machine) <= t; the identity is a
    fixed point of both machines, so applying exactly t passes and
    checking the result suffices.
    """
    if t < 0:
        raise ValueError(f"pass count must be >= 0, got {t}")
    if machine not in ("stack", "popstack"):
        raise ValueError(f"machine must be 'stack' or 'popstack', got {machine!r}")
    f = _OPS[machine]
    _check_operand(machine, pi)
    cur = tuple(pi)
    target = identity(len(cur))
    for _ in range(t):
        if cur == target:
            return True
        cur = f(cur)
    return cur == target
