"""Nondeterministic machines: the full output set of a single device pass.

Where the deterministic operators fix one schedule, the machines here
may take any legal schedule, so one input maps to a *set* of outputs:

* ``tumble_set`` -- on binary words: reverse one chosen factor of the
  form 1..10..0 at every 10 boundary.
* ``stack_outputs`` -- every interleaving of pushes and single pops
  through an unrestricted stack.
* ``pop_stack_outputs`` -- as above, but a pop always empties the whole
  stack, top first.

``reach`` iterates any of them: t passes with the full output buffered
between passes.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .core import Perm, Word, identity, is_binary_word, is_permutation

MACHINE_NAMES = ("stack", "popstack", "tumble")


def descent_blocks(w: Sequence[int]) -> list[tuple[int, int, int]]:
    """Spans (start, mid, stop) of each maximal 1^a 0^b factor with a 10 inside.

    Ones occupy [start, mid) and zeros [mid, stop); a = mid - start >= 1
    and b = stop - mid >= 1.  Every 10 factor of the word sits at the
    boundary of exactly one block.
    """
    blocks = []
    n = len(w)
    i = 0
    while i < n - 1:
        if w[i] == 1 and w[i + 1] == 0:
            start = i
            while start > 0 and w[start - 1] == 1:
                start -= 1
            stop = i + 2
            while stop < n and w[stop] == 0:
                stop += 1
            blocks.append((start, i + 1, stop))
            i = stop
        else:
            i += 1
    return blocks


def tumble_set(w: Sequence[int]) -> set[Word]:
    """All words one tumble pass can produce.

    A tumble reverses a set of non-overlapping 1..10..0 factors that
    together cover every 10 factor.  Each descent block of a ones and b
    zeros contributes an independent choice among a*b factor shapes, so
    the result has exactly the product of the a*b values as its size.

    >>> sorted("".join(map(str, u)) for u in tumble_set((1, 1, 0, 0, 1, 0)))
    ['001101', '011001', '100101', '101001']
    """
    w = tuple(w)
    if not is_binary_word(w):
        raise TypeError(f"tumble acts on binary words, got {w!r}")
    blocks = descent_blocks(w)
    if not blocks:
        return {w}
    pieces = []
    options = []
    prev = 0
    for start, mid, stop in blocks:
        pieces.append(w[prev:start])
        a = mid - start
        b = stop - mid
        opts = []
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                # reverse the factor 1^i 0^j ending/starting at the boundary
                opts.append((1,) * (a - i) + (0,) * j + (1,) * i + (0,) * (b - j))
        options.append(opts)
        prev = stop
    pieces.append(w[prev:])
    out = set()
    for choice in product(*options):
        word = pieces[0]
        for k, segment in enumerate(choice):
            word = word + segment + pieces[k + 1]
        out.add(word)
    return out


def _is_ones_then_zeros(seg: Sequence[int]) -> bool:
    i = 0
    n = len(seg)
    while i < n and seg[i] == 1:
        i += 1
    ones = i
    while i < n and seg[i] == 0:
        i += 1
    return ones >= 1 and i == n and n - ones >= 1


def tumble_set_naive(w: Sequence[int]) -> set[Word]:
    """Reference implementation straight from the definition.

    Enumerates every collection of non-overlapping 1..10..0 factors that
    covers all 10 factors, reverses each collection in place, and
    collects the distinct results.  Exponential; test-oracle use only.
    """
    w = tuple(w)
    n = len(w)
    tens = [i for i in range(n - 1) if w[i] == 1 and w[i + 1] == 0]
    if not tens:
        return {w}
    candidates = [
        (s, e) for s in range(n) for e in range(s + 2, n + 1) if _is_ones_then_zeros(w[s:e])
    ]
    out: set[Word] = set()

    def choose(idx: int, chosen: list[tuple[int, int]]) -> None:
        if idx == len(tens):
            u = list(w)
            for s, e in chosen:
                u[s:e] = u[s:e][::-1]
            out.add(tuple(u))
            return
        i = tens[idx]
        for s, e in candidates:
            if s <= i and e >= i + 2 and all(e <= s2 or e2 <= s for s2, e2 in chosen):
                chosen.append((s, e))
                choose(idx + 1, chosen)
                chosen.pop()

    choose(0, [])
    return out


def stack_outputs(pi: Sequence[int]) -> set[Perm]:
    """Every output of one pass through a nondeterministic stack.

    Depth-first search over machine states (input position, stack
    contents), memoized per state so shared subtrees are expanded once.

    >>> sorted(stack_outputs((2, 3, 1)))
    [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    pi = tuple(pi)
    n = len(pi)
    memo: dict[tuple[int, tuple[int, ...]], frozenset] = {}

    def emitted_after(i: int, stack: tuple[int, ...]) -> frozenset:
        key = (i, stack)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if i == n and not stack:
            res = frozenset({()})
        else:
            acc = set()
            if i < n:
                acc.update(emitted_after(i + 1, stack + (pi[i],)))
            if stack:
                top = stack[-1]
                acc.update((top,) + tail for tail in emitted_after(i, stack[:-1]))
            res = frozenset(acc)
        memo[key] = res
        return res

    return set(emitted_after(0, ()))


def pop_stack_outputs(pi: Sequence[int]) -> set[Perm]:
    """Every output of one pass through a nondeterministic pop-stack.

    A pop always emits the entire stack contents, top first, and pushing
    onto a nonempty stack is allowed regardless of value order.  Popping
    an empty stack is not a move (it could only repeat an existing
    state).

    >>> sorted(pop_stack_outputs((2, 3, 1)))
    [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 2, 1)]
    """
    pi = tuple(pi)
    n = len(pi)
    memo: dict[tuple[int, tuple[int, ...]], frozenset] = {}

    def emitted_after(i: int, stack: tuple[int, ...]) -> frozenset:
        key = (i, stack)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = set()
        if i == n and not stack:
            acc.add(())
        if i < n:
            acc.update(emitted_after(i + 1, stack + (pi[i],)))
        if stack:
            burst = stack[::-1]
            acc.update(burst + tail for tail in emitted_after(i, ()))
        res = frozenset(acc)
        memo[key] = res
        return res

    return set(emitted_after(0, ()))


_MACHINES = {"stack": stack_outputs, "popstack": pop_stack_outputs, "tumble": tumble_set}


def reach(x: Sequence[int], machine: str, t: int) -> set[tuple[int, ...]]:
    """Everything reachable after t passes through the machine.

    The full output set of each pass feeds the next (outputs buffered in
    between), so reach(x, m, 0) == {x} and the sets grow monotonically
    with t: every machine can pass its input through unchanged.
    """
    try:
        step = _MACHINES[machine]
    except KeyError:
        raise ValueError(f"unknown machine {machine!r}; expected one of {MACHINE_NAMES}") from None
    if t < 0:
        raise ValueError(f"pass count must be >= 0, got {t}")
    x = tuple(x)
    if machine == "tumble":
        if not is_binary_word(x):
            raise TypeError(f"tumble acts on binary words, got {x!r}")
    elif not is_permutation(x):
        raise TypeError(f"machine {machine!r} acts on permutations, got {x!r}")
    current = {x}
    for _ in range(t):
        nxt: set[tuple[int, ...]] = set()
        for y in current:
            nxt.update(step(y))
        current = nxt
    return current


def sortable_in_series(pi: Sequence[int], machine: str, t: int) -> bool:
    """True iff t nondeterministic devices in series (buffered) can sort pi."""
    if machine not in ("stack", "popstack"):
        raise ValueError(f"machine must be 'stack' or 'popstack', got {machine!r}")
    return identity(len(pi)) in reach(pi, machine, t)
