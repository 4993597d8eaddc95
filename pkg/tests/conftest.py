"""Shared test helpers: random generators and independent oracles.

The oracles here re-derive expected values through separate machinery
(letter-stack reduction in the free product, breadth-first conjugate
search, set-based cyclic permutation tests) so that library code is
never checked against itself.
"""

from __future__ import annotations

import random
from typing import List, Tuple

from cycpres.relative import RelativeWord
from cycpres.words import Word, concat, free_reduce, invert


# -- free product C_n * <x>: independent letter-stack reduction ------------

def fp_reduce(tokens, n: int) -> Tuple[Tuple[str, int], ...]:
    """Reduce a stream of ('x', k) / ('a', p) tokens to normal form."""
    stack: List[Tuple[str, int]] = []
    for kind, val in tokens:
        if kind == "a":
            val %= n
        if val == 0:
            continue
        if stack and stack[-1][0] == kind:
            prev_kind, prev_val = stack.pop()
            merged = prev_val + val
            if kind == "a":
                merged %= n
            if merged:
                stack.append((prev_kind, merged))
        else:
            stack.append((kind, val))
    return tuple(stack)


def relative_word_tokens(W: RelativeWord):
    for e, p in W.syllables:
        yield ("x", e)
        yield ("a", p)


def substitute_kernel_generators(word: Word, n: int, f: int):
    """Token stream of the substitution x_i -> a^i x a^{-(i+f)}."""
    for i, s in word.letters:
        if s == 1:
            yield ("a", i)
            yield ("x", 1)
            yield ("a", -(i + f))
        else:
            yield ("a", i + f)
            yield ("x", -1)
            yield ("a", -i)


# -- random inputs ---------------------------------------------------------

def random_word(rng: random.Random, n: int, max_len: int = 12) -> Word:
    length = rng.randint(0, max_len)
    return Word(
        n, [(rng.randrange(n), rng.choice((1, -1))) for _ in range(length)]
    )


def random_cyclically_reduced_word(
    rng: random.Random, n: int, max_len: int = 8
) -> Word:
    while True:
        w = random_word(rng, n, max_len)
        if len(w) > 0 and w.is_cyclically_reduced:
            return w


def random_cyclically_reduced_relative_word(
    rng: random.Random, n: int, max_len: int = 6
) -> RelativeWord:
    """Random relative word, cyclically reduced in the free product (n >= 2)."""
    length = rng.randint(1, max_len)
    eps = [rng.choice((1, -1)) for _ in range(length)]
    ps = [rng.randint(-2 * n, 2 * n) for _ in range(length)]
    for i in range(length):
        if eps[(i + 1) % length] == -eps[i] and ps[i] % n == 0:
            ps[i] += rng.randint(1, n - 1)
    return RelativeWord(zip(eps, ps))


# -- oracles ---------------------------------------------------------------

def reduce_in_random_order(w: Word, rng: random.Random) -> Word:
    """Free reduction cancelling pairs in a random order."""
    letters = list(w.letters)
    while True:
        pairs = [
            i
            for i in range(len(letters) - 1)
            if letters[i][0] == letters[i + 1][0]
            and letters[i][1] == -letters[i + 1][1]
        ]
        if not pairs:
            return Word(w.n, letters)
        i = rng.choice(pairs)
        del letters[i : i + 2]


def min_conjugate_length(w: Word) -> int:
    """Minimal length in the conjugacy class of w, by breadth-first search
    over single-letter conjugations (length never needs to grow)."""
    start = free_reduce(w)
    seen = {start.letters}
    frontier = [start]
    best = len(start)
    while frontier:
        new = []
        for u in frontier:
            for i in range(u.n):
                for s in (1, -1):
                    g = Word(u.n, [(i, s)])
                    v = free_reduce(concat(invert(g), u, g))
                    if len(v) <= len(u) and v.letters not in seen:
                        seen.add(v.letters)
                        best = min(best, len(v))
                        new.append(v)
        frontier = new
    return best
