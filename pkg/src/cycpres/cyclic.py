"""Cyclic presentations P_n(w) and the three-generator family G_n(k,l).

P_n(w) has generators x_0, ..., x_{n-1} and relators w, shift(w), ...,
shift^{n-1}(w).  A presentation is orientable when w is not a cyclic
permutation of the inverse of any of its shifts; non-orientability can
only happen for even n = 2m, in which case w may decompose (letter for
letter) as u * shift^m(u)^{-1}, and that u is reported as a witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .words import Word, concat, free_reduce, invert, is_cyclic_perm, shift


class CyclicPresentation:
    """n together with a nonempty, cyclically reduced defining word."""

    __slots__ = ("n", "word", "relators")

    def __init__(self, n: int, word: Word):
        if word.n != n:
            raise ValueError(f"word modulus {word.n} does not match n={n}")
        if len(word) == 0:
            raise ValueError("defining word must be nonempty")
        if not word.is_cyclically_reduced:
            raise ValueError(f"defining word {word!r} is not cyclically reduced")
        self.n = n
        self.word = word
        self.relators = tuple(shift(word, i) for i in range(n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicPresentation)
            and self.n == other.n
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.n, self.word))

    def __repr__(self) -> str:
        return f"P_{self.n}({self.word})"


@dataclass(frozen=True)
class OrientabilityVerdict:
    """Outcome of the orientability test.

    When non-orientable and w itself has the half-word shape, ``witness``
    is a pair (u, m) with n = 2m and u * shift^m(u)^{-1} freely equal to
    w.  Non-orientable words that are only a nontrivial cyclic rotation
    of such a shape carry no witness.
    """

    orientable: bool
    witness: Optional[Tuple[Word, int]] = None


def presentation(n: int, w: Word) -> CyclicPresentation:
    """Build P_n(w); rejects empty or non-cyclically-reduced words."""
    return CyclicPresentation(n, w)


def gnkl(n: int, k: int, l: int) -> CyclicPresentation:
    """The presentation P_n(x_0 x_k x_l) defining G_n(k, l)."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return CyclicPresentation(n, Word(n, [(0, 1), (k % n, 1), (l % n, 1)]))


def orientability(pres: CyclicPresentation) -> OrientabilityVerdict:
    """Test whether w is a cyclic permutation of an inverted shift of w."""
    w, n = pres.word, pres.n
    hit = any(
        is_cyclic_perm(w, invert(shift(w, v))) is not None for v in range(n)
    )
    if not hit:
        return OrientabilityVerdict(True)
    witness = None
    length = len(w)
    if n % 2 == 0 and length % 2 == 0:
        m = n // 2
        u = Word(n, w.letters[: length // 2])
        if free_reduce(concat(u, invert(shift(u, m)))) == w:
            witness = (u, m)
    return OrientabilityVerdict(False, witness)


def gcd_decompose(n: int, k: int, l: int) -> Tuple[int, Tuple[int, int, int]]:
    """d = gcd(n, k, l) and the reduced triple (n/d, k/d, l/d).

    P_n(k,l) is a disjoint union of d copies of the reduced presentation,
    so G_n(k,l) is the free product of d copies of G_{n/d}(k/d, l/d).
    gcd(n, 0, 0) is n, making P_n(0,0) reduce to the single cube relator
    presentation of the cyclic group of order three.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k %= n
    l %= n
    d = math.gcd(n, k, l)
    return d, (n // d, k // d, l // d)
