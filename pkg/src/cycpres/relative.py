"""Relative presentations (C_n, x : W) and the retraction-kernel rewriting.

A relative word lives in the free product of the cyclic group of order n
(generated by a) with an infinite cyclic group generated by x.  It is
stored x-first as syllables (e_i, p_i) meaning

    W = x^{e_1} a^{p_1} x^{e_2} a^{p_2} ... x^{e_L} a^{p_L},

with e_i = +-1 and the a-exponents arbitrary integers compared modulo n.
The group E presented by (a, x : a^n, W) retracts onto the cyclic
subgroup generated by a exactly for the exponents f with e*f + p = 0
(mod n), where e and p are the exponent sums of x and a in W.  For each
such f the kernel is cyclically presented on the defining word rho(W, n, f),
and conjugation by a realizes the shift on the kernel.

Text grammar: whitespace-separated tokens ``x``, ``X`` (= x^{-1}),
``a^<int>`` (also ``a`` and ``A`` for a^{+-1}), e.g. ``x a^2 X a^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .enumerate import FinitePresentation
from .words import Word

Syllable = Tuple[int, int]  # (x-sign +1/-1, a-exponent)


class RelativeWord:
    """Cyclic-product word x^{e_1}a^{p_1}...x^{e_L}a^{p_L}, stored x-first.

    Words with no x-letter cannot be represented (L >= 1 is required).

    >>> W = RelativeWord.from_text("x a^2 x a^2")
    >>> W.syllables
    ((1, 2), (1, 2))
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables: Iterable[Syllable]):
        syl = tuple((int(e), int(p)) for e, p in syllables)
        if not syl:
            raise ValueError("a relative word needs at least one x syllable")
        for e, _ in syl:
            if e not in (1, -1):
                raise ValueError(f"x-exponent must be +1 or -1, got {e}")
        self.syllables = syl

    @classmethod
    def from_text(cls, text: str) -> "RelativeWord":
        stream: List[Tuple[str, int]] = []
        for tok in text.split():
            if tok == "x":
                stream.append(("x", 1))
            elif tok == "X":
                stream.append(("x", -1))
            elif tok == "a":
                stream.append(("a", 1))
            elif tok == "A":
                stream.append(("a", -1))
            elif tok.startswith("a^"):
                stream.append(("a", int(tok[2:])))
            else:
                raise ValueError(f"bad relative-word token {tok!r}")
        # a leading coefficient is rotated to the tail (conjugation does
        # not change the presented group)
        i = 0
        while i < len(stream) and stream[i][0] == "a":
            i += 1
        if i == len(stream):
            raise ValueError("a relative word needs at least one x letter")
        stream = stream[i:] + stream[:i]
        syllables: List[List[int]] = []
        for kind, val in stream:
            if kind == "x":
                syllables.append([val, 0])
            else:
                syllables[-1][1] += val
        return cls((e, p) for e, p in syllables)

    @property
    def length(self) -> int:
        return len(self.syllables)

    @property
    def epsilon_sum(self) -> int:
        return sum(e for e, _ in self.syllables)

    @property
    def p_sum(self) -> int:
        return sum(p for _, p in self.syllables)

    def reduced(self, n: int) -> "RelativeWord":
        """Copy with all a-exponents normalized into [0, n)."""
        return RelativeWord((e, p % n) for e, p in self.syllables)

    def is_cyclically_reduced(self, n: int) -> bool:
        """No cyclic position where x^e a^{p=0 mod n} x^{-e} cancels."""
        syl = self.syllables
        L = len(syl)
        return all(
            not (syl[(i + 1) % L][0] == -syl[i][0] and syl[i][1] % n == 0)
            for i in range(L)
        )

    def inverse(self) -> "RelativeWord":
        """The inverse, rotated back into x-first form (a conjugate)."""
        syl = self.syllables
        L = len(syl)
        return RelativeWord(
            (-syl[L - 1 - i][0], -syl[(L - 2 - i) % L][1]) for i in range(L)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, RelativeWord) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __repr__(self) -> str:
        return f"RelativeWord({str(self)!r})"

    def __str__(self) -> str:
        parts = []
        for e, p in self.syllables:
            parts.append("x" if e > 0 else "X")
            if p:
                parts.append(f"a^{p}")
        return " ".join(parts)


@dataclass(frozen=True)
class Retraction:
    """A valid retraction exponent f, with the witnessing exponent sums."""

    f: int
    epsilon_sum: int
    p_sum: int


@dataclass(frozen=True)
class RootData:
    """Maximal decomposition W = root^exponent, syllable-wise modulo n.

    ``sigma`` is the a-exponent of the retraction image of the root,
    sum of (e_j * f + p_j) over the root, taken mod n when f is given.
    """

    root: RelativeWord
    exponent: int
    sigma: Optional[int] = None


def valid_retractions(W: RelativeWord, n: int) -> Tuple[Retraction, ...]:
    """All f in [0, n) with epsilon_sum * f + p_sum = 0 (mod n).

    >>> [r.f for r in valid_retractions(RelativeWord.from_text("x x a^9 x a^6"), 18)]
    [1, 7, 13]
    """
    eps, p = W.epsilon_sum, W.p_sum
    return tuple(
        Retraction(f, eps, p) for f in range(n) if (eps * f + p) % n == 0
    )


def is_valid_retraction(W: RelativeWord, n: int, f: int) -> bool:
    return (W.epsilon_sum * f + W.p_sum) % n == 0


def rho(W: RelativeWord, n: int, f: int) -> Word:
    """Rewrite W into the defining word of the kernel of the retraction f.

    With v(1) = 0 and v(i) the partial sum of e_j*f + p_j over j < i, the
    output is the word whose i-th letter is x_{v(i)}^{+1} or
    x_{v(i)-f}^{-1} according to the sign e_i, subscripts mod n.

    >>> str(rho(RelativeWord.from_text("x x x"), 3, 1))
    'x0 x1 x2'
    """
    if not is_valid_retraction(W, n, f):
        eps, p = W.epsilon_sum, W.p_sum
        raise ValueError(
            f"f={f} is not a retraction exponent: "
            f"{eps}*{f} + {p} = {eps * f + p} != 0 (mod {n})"
        )
    letters = []
    v = 0
    for e, p in W.syllables:
        u = v if e == 1 else v - f
        letters.append((u % n, e))
        v += e * f + p
    return Word(n, letters)


def to_relative(w: Word, n: int) -> RelativeWord:
    """Convert a cyclically reduced word on x_0..x_{n-1} to relative form.

    The a-exponents are the consecutive subscript differences (taken
    cyclically), so that shift(rho(W, n, 0), p_1) recovers w, where p_1
    is the subscript of the first letter of w.
    """
    if w.n != n:
        raise ValueError(f"word modulus {w.n} does not match n={n}")
    if len(w) == 0:
        raise ValueError("cannot convert the empty word")
    if not w.is_cyclically_reduced:
        raise ValueError(f"{w!r} is not cyclically reduced")
    idx = [i for i, _ in w.letters]
    sgn = [s for _, s in w.letters]
    L = len(idx)
    return RelativeWord(
        (sgn[j], idx[(j + 1) % L] - idx[j]) for j in range(L)
    )


def root(W: RelativeWord, n: int, f: Optional[int] = None) -> RootData:
    """Maximal e and root with W = root^e, comparing syllables mod n."""
    syl = [(e, p % n) for e, p in W.syllables]
    L = len(syl)
    period = L
    for cand in range(1, L):
        if L % cand == 0 and all(syl[i] == syl[i % cand] for i in range(L)):
            period = cand
            break
    rt = RelativeWord(W.syllables[:period])
    sigma = None
    if f is not None:
        sigma = sum(e * f + p for e, p in rt.syllables) % n
    return RootData(rt, L // period, sigma)


# -- free-product normal forms (for conjugacy testing) -------------------


def _normal_form(syllables: Iterable[Syllable], n: int) -> Tuple[Tuple[str, int], ...]:
    out: List[Tuple[str, int]] = []

    def push(kind: str, val: int):
        if kind == "a":
            val %= n
        if not val:
            return
        if out and out[-1][0] == kind:
            prev = out.pop()[1]
            val = prev + val
            if kind == "a":
                val %= n
            if not val:
                return
        out.append((kind, val))

    for e, p in syllables:
        push("x", e)
        push("a", p)
    return tuple(out)


def _cyclically_reduce_nf(nf, n: int):
    nf = list(nf)
    while len(nf) >= 2 and nf[0][0] == nf[-1][0]:
        kind = nf[0][0]
        val = nf[0][1] + nf[-1][1]
        if kind == "a":
            val %= n
        nf = nf[1:-1] + ([(kind, val)] if val else [])
    return tuple(nf)


def relative_orientable(W: RelativeWord, n: int) -> bool:
    """True when W is not conjugate to its inverse in the free product.

    Conjugacy of cyclically reduced free-product elements is cyclic
    permutation of their syllable normal forms.
    """
    nf = _cyclically_reduce_nf(_normal_form(W.syllables, n), n)
    inv = tuple(
        (kind, (-val) % n if kind == "a" else -val)
        for kind, val in reversed(nf)
    )
    if len(nf) != len(inv):
        return True
    if len(nf) <= 1:
        return nf != inv
    return all(inv != nf[r:] + nf[:r] for r in range(len(nf)))


def change_variable(W: RelativeWord, n: int, t: int) -> RelativeWord:
    """Substitute x = u a^{-t} (that is, u = x a^t) and rewrite in u.

    The result presents the same group over the same coefficient
    subgroup; it is returned cyclically reduced and x-first.
    """
    syl = W.syllables
    L = len(syl)
    new = []
    for i in range(L):
        e, p = syl[i]
        p_new = p - (t if e == 1 else 0) + (t if syl[(i + 1) % L][0] == -1 else 0)
        new.append((e, p_new))
    return _cyclic_reduce_syllables(new, n)


def _cyclic_reduce_syllables(syl: List[Syllable], n: int) -> RelativeWord:
    syl = list(syl)
    while True:
        L = len(syl)
        found = None
        if L >= 2:
            for i in range(L):
                if syl[(i + 1) % L][0] == -syl[i][0] and syl[i][1] % n == 0:
                    found = i
                    break
        if found is None:
            return RelativeWord(syl)
        # x^e a^{0 mod n} x^{-e} cancels; its trailing a-power folds back
        # onto the preceding syllable
        i = found
        j = (i + 1) % L
        prev = (i - 1) % L
        if prev == j:
            raise ValueError("word reduces to a coefficient; no x letter left")
        carry = syl[i][1] + syl[j][1]
        e_prev, p_prev = syl[prev]
        syl[prev] = (e_prev, p_prev + carry)
        syl = [syl[k] for k in range(L) if k != i and k != j]


def lift(W: RelativeWord, n: int) -> FinitePresentation:
    """The ordinary presentation (a, x : a^n, W(a, x)).

    Coefficients are lifted with a-exponents normalized into [0, n), so
    the exponent of the relator in the free group matches the exponent
    of W in the free product.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    a, x = 1, 2
    rel: List[int] = []
    for e, p in W.syllables:
        rel.append(x if e > 0 else -x)
        rel.extend([a] * (p % n))
    return FinitePresentation(("a", "x"), ((a,) * n, tuple(rel)))
