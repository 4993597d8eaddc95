"""Words over the indexed generators x_0, ..., x_{n-1}.

Generator indices are taken modulo n throughout, and the shift is the
automorphism sending x_i to x_{i+1}.  The text form of a word is a
whitespace-separated token list: lowercase ``x3`` is x_3, uppercase
``X3`` is x_3^{-1}, so ``x0 x1 X2`` denotes x_0 x_1 x_2^{-1}.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Optional, Tuple

Letter = Tuple[int, int]  # (generator index, sign +1 or -1)

_TOKEN = re.compile(r"([xX])(\d+)")


class Word:
    """An immutable (not necessarily reduced) word over x_0..x_{n-1}.

    Indices are normalized into [0, n) at construction.  The empty word
    is a valid Word and acts as the identity.

    >>> w = Word(3, [(0, 1), (4, -1)])
    >>> str(w)
    'x0 X1'
    >>> len(Word(3))
    0
    """

    __slots__ = ("n", "letters")

    def __init__(self, n: int, letters: Iterable[Letter] = ()):
        if n < 1:
            raise ValueError(f"modulus must be a positive integer, got {n}")
        normalized = []
        for idx, sign in letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
            normalized.append((idx % n, sign))
        self.n = n
        self.letters = tuple(normalized)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.n == other.n
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.n, self.letters))

    def __repr__(self) -> str:
        return f"Word({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        return " ".join(
            (f"x{i}" if s > 0 else f"X{i}") for i, s in self.letters
        )

    @property
    def is_reduced(self) -> bool:
        """True when no adjacent pair of letters cancels."""
        letters = self.letters
        return all(
            not (a[0] == b[0] and a[1] == -b[1])
            for a, b in zip(letters, letters[1:])
        )

    @property
    def is_cyclically_reduced(self) -> bool:
        """True when reduced and the first/last letters do not cancel."""
        if not self.is_reduced:
            return False
        if len(self.letters) < 2:
            return True
        first, last = self.letters[0], self.letters[-1]
        return not (first[0] == last[0] and first[1] == -last[1])


def parse_word(text: str, n: int) -> Word:
    """Parse the token grammar (``x<i>`` / ``X<i>``); rejects indices >= n.

    >>> parse_word("x0 x1 X2", 5)
    Word(5, 'x0 x1 X2')
    """
    letters = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad word token {tok!r}")
        idx = int(m.group(2))
        if idx >= n:
            raise ValueError(f"generator index {idx} out of range for n={n}")
        letters.append((idx, 1 if m.group(1) == "x" else -1))
    return Word(n, letters)


def concat(*words: Word) -> Word:
    """Concatenate words over the same modulus (no reduction applied)."""
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].n
    letters = []
    for w in words:
        if w.n != n:
            raise ValueError(f"mixed moduli in concat: {n} and {w.n}")
        letters.extend(w.letters)
    return Word(n, letters)


def free_reduce(w: Word) -> Word:
    """The unique freely reduced form of ``w``.

    >>> free_reduce(parse_word("x0 x1 X1", 3))
    Word(3, 'x0')
    """
    stack: list[Letter] = []
    for idx, sign in w.letters:
        if stack and stack[-1][0] == idx and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((idx, sign))
    return Word(w.n, stack)


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Cyclically reduce ``w``.

    Returns ``(core, conjugator)`` with core cyclically reduced and
    ``conjugator * core * conjugator^{-1}`` freely equal to ``w``.
    """
    letters = list(free_reduce(w).letters)
    prefix: list[Letter] = []
    while (
        len(letters) >= 2
        and letters[0][0] == letters[-1][0]
        and letters[0][1] == -letters[-1][1]
    ):
        prefix.append(letters[0])
        letters = letters[1:-1]
    return Word(w.n, letters), Word(w.n, prefix)


def shift(w: Word, k: int) -> Word:
    """Apply the shift k times: every index i becomes (i + k) mod n.

    >>> shift(parse_word("x0 x1 x2", 3), 1)
    Word(3, 'x1 x2 x0')
    """
    n = w.n
    return Word(n, [((i + k) % n, s) for i, s in w.letters])


def invert(w: Word) -> Word:
    """The inverse word: reversed letters with negated signs."""
    return Word(w.n, [(i, -s) for i, s in reversed(w.letters)])


def rotate(w: Word, r: int) -> Word:
    """Cyclic permutation moving the first r letters to the end."""
    letters = w.letters
    if not letters:
        return w
    r %= len(letters)
    return Word(w.n, letters[r:] + letters[:r])


def is_cyclic_perm(w1: Word, w2: Word) -> Optional[int]:
    """Rotation amount r with rotate(w1, r) == w2, or None.

    Meant for cyclically reduced inputs, where cyclic permutation
    coincides with conjugacy.

    >>> is_cyclic_perm(parse_word("x0 x1 x2", 3), parse_word("x1 x2 x0", 3))
    1
    """
    if w1.n != w2.n or len(w1.letters) != len(w2.letters):
        return None
    a, b = w1.letters, w2.letters
    if not a:
        return 0
    for r in range(len(a)):
        if a[r:] + a[:r] == b:
            return r
    return None
