"""Todd-Coxeter coset enumeration over finite presentations.

The enumerator computes the action of a finitely presented group on the
cosets of a finitely generated subgroup.  Completion proves the index
finite and yields a standardized table; running out of room proves
nothing, so exhaustion is reported as an ``overflow`` table, never as a
wrong answer.

Two strategies are provided.  HLT scans every relator at every live
coset, defining new cosets to fill gaps; when the coset limit is hit it
runs a lookahead pass (scanning without defining) to collapse the table
before giving up.  Felsch makes one definition at a time and propagates
deductions exhaustively.  Completed tables are standardized (renumbered
in first-visit order, columns scanned in declared generator order), so
both strategies expose bit-for-bit identical results.

Presentation text format::

    gens: b u
    rels:
    b^6
    u u b^3 u b^2
    sub:
    b

Word tokens are whitespace separated: a generator name for the
generator, its capitalized form for the inverse, and ``name^<int>`` for
powers (negative exponents allowed).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

WordInts = Tuple[int, ...]  # letters as nonzero signed 1-based generator numbers

_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def _parse_letters(text: str, generators: Sequence[str]) -> WordInts:
    index = {g: i + 1 for i, g in enumerate(generators)}
    letters: List[int] = []
    for tok in text.split():
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad word token {tok!r}")
        base, exp = m.group(1), m.group(2)
        sign = 1
        if base not in index:
            lowered = base[0].lower() + base[1:]
            if base[0].isupper() and lowered in index:
                base, sign = lowered, -1
            else:
                raise ValueError(f"undeclared generator in token {tok!r}")
        e = 1 if exp is None else int(exp)
        if e < 0:
            sign, e = -sign, -e
        letters.extend([sign * index[base]] * e)
    return tuple(letters)


def _letters_text(word: WordInts, generators: Sequence[str]) -> str:
    out = []
    for g in word:
        name = generators[abs(g) - 1]
        out.append(name if g > 0 else name[0].upper() + name[1:])
    return " ".join(out)


@dataclass(frozen=True)
class FinitePresentation:
    """Named generators, relator words, and optional subgroup generators."""

    generators: Tuple[str, ...]
    relators: Tuple[WordInts, ...]
    subgroup: Tuple[WordInts, ...] = ()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        for g in self.generators:
            if not (g[0].islower() and g.isidentifier()):
                raise ValueError(f"generator name {g!r} must be a lowercase identifier")
        ngens = len(self.generators)
        for w in self.relators:
            if not w:
                raise ValueError("relators must be nonempty words")
            self._check_word(w, ngens)
        for w in self.subgroup:
            if not w:
                raise ValueError("subgroup generators must be nonempty words")
            self._check_word(w, ngens)

    @staticmethod
    def _check_word(word: WordInts, ngens: int):
        for g in word:
            if g == 0 or abs(g) > ngens:
                raise ValueError(f"letter {g} out of range in word {word}")

    @classmethod
    def make(
        cls,
        generators: Sequence[str],
        relators: Iterable[str],
        subgroup: Iterable[str] = (),
    ) -> "FinitePresentation":
        """Build a presentation from token-text words."""
        gens = tuple(generators)
        return cls(
            gens,
            tuple(_parse_letters(r, gens) for r in relators),
            tuple(_parse_letters(s, gens) for s in subgroup),
        )

    def word(self, text: str) -> WordInts:
        return _parse_letters(text, self.generators)

    def word_text(self, word: WordInts) -> str:
        return _letters_text(word, self.generators)

    def __str__(self) -> str:
        lines = ["gens: " + " ".join(self.generators), "rels:"]
        lines += [self.word_text(r) for r in self.relators]
        if self.subgroup:
            lines.append("sub:")
            lines += [self.word_text(s) for s in self.subgroup]
        return "\n".join(lines)


def parse_presentation(text: str) -> FinitePresentation:
    """Parse the presentation file format (see module docstring)."""
    gens = None
    section = None
    rels: List[str] = []
    subs: List[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            gens = line[len("gens:"):].split()
            continue
        if line == "rels:":
            section = "rels"
            continue
        if line == "sub:":
            section = "sub"
            continue
        if gens is None or section is None:
            raise ValueError(f"unexpected line before section header: {line!r}")
        (rels if section == "rels" else subs).append(line)
    if gens is None:
        raise ValueError("missing 'gens:' header")
    return FinitePresentation.make(gens, rels, subs)


@dataclass(frozen=True)
class CosetTable:
    """Action table of the generators on cosets, numbered from 0.

    Coset 0 is the subgroup itself.  Row layout: column 2i is generator
    i, column 2i+1 its inverse.  Complete tables are standardized;
    overflow tables are partial and use -1 for undefined entries.
    """

    generators: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]
    status: str  # "complete" | "overflow"
    count: int
    defined: int  # total cosets defined during the run, dead ones included

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def column(self, gen: str) -> Tuple[int, ...]:
        i = self.generators.index(gen)
        return tuple(row[2 * i] for row in self.rows)

    def trace(self, coset: int, word: WordInts) -> int:
        """Follow ``word`` from ``coset``; -1 if an entry is undefined."""
        for g in word:
            col = 2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1
            coset = self.rows[coset][col]
            if coset < 0:
                return -1
        return coset

    def dump(self) -> str:
        """One line per coset, images under the declared generators."""
        header = "coset | " + " ".join(f"{g:>5}" for g in self.generators)
        lines = [header, "-" * len(header)]
        for i, row in enumerate(self.rows):
            imgs = " ".join(
                f"{row[2 * j] + 1 if row[2 * j] >= 0 else '-':>5}"
                for j in range(len(self.generators))
            )
            lines.append(f"{i + 1:>5} | {imgs}")
        return "\n".join(lines)


class _TableFull(Exception):
    pass


class _Enumerator:
    """Mutable enumeration state; 1-based cosets, 0 = undefined entry."""

    __slots__ = (
        "ncols", "max", "felsch", "rels", "subs", "tbl", "p", "q",
        "live", "defined", "dstack", "ded",
    )

    def __init__(self, pres: FinitePresentation, max_cosets: int, felsch: bool):
        self.ncols = 2 * len(pres.generators)
        self.max = max(1, max_cosets)
        self.felsch = felsch
        self.rels = [self._columns(w) for w in pres.relators]
        self.subs = [self._columns(w) for w in pres.subgroup]
        self.tbl: List[List[int]] = [[], [0] * self.ncols]
        self.p = [0, 1]
        self.q: deque = deque()
        self.live = 1
        self.defined = 1
        self.dstack: List[Tuple[int, int]] = []
        self.ded: Dict[int, List[WordInts]] = {}
        if felsch:
            byfirst: Dict[int, List[WordInts]] = {}
            for w in self.rels:
                seen = set()
                for i in range(len(w)):
                    rot = w[i:] + w[:i]
                    if rot not in seen:
                        seen.add(rot)
                        byfirst.setdefault(rot[0], []).append(rot)
            self.ded = byfirst

    @staticmethod
    def _columns(word: WordInts) -> WordInts:
        return tuple(2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1 for g in word)

    # -- union-find over coset numbers ------------------------------------

    def _rep(self, k: int) -> int:
        p = self.p
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def _merge(self, a: int, b: int):
        a, b = self._rep(a), self._rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            self.live -= 1
            self.q.append(b)

    def _coincide(self, a: int, b: int):
        self._merge(a, b)
        tbl, q, ncols = self.tbl, self.q, self.ncols
        felsch, push = self.felsch, self.dstack.append
        while q:
            g = q.popleft()
            row = tbl[g]
            for c in range(ncols):
                d = row[c]
                if not d:
                    continue
                # the twin entry still points at the dead coset; drop it
                tbl[d][c ^ 1] = 0
                mu = self._rep(g)
                nu = self._rep(d)
                t = tbl[mu][c]
                if t:
                    self._merge(nu, t)
                else:
                    t = tbl[nu][c ^ 1]
                    if t:
                        self._merge(mu, t)
                    else:
                        tbl[mu][c] = nu
                        tbl[nu][c ^ 1] = mu
                        if felsch:
                            push((mu, c))
                            push((nu, c ^ 1))

    # -- table growth ------------------------------------------------------

    def _define(self, a: int, c: int) -> int:
        if len(self.tbl) - 1 >= self.max:
            raise _TableFull
        b = len(self.tbl)
        self.tbl.append([0] * self.ncols)
        self.p.append(b)
        self.tbl[a][c] = b
        self.tbl[b][c ^ 1] = a
        self.live += 1
        self.defined += 1
        if self.felsch:
            self.dstack.append((a, c))
            self.dstack.append((b, c ^ 1))
        return b

    def _scan_and_fill(self, a: int, word: WordInts):
        tbl = self.tbl
        i, j = 0, len(word) - 1
        f = b = a
        while True:
            while i <= j:
                nxt = tbl[f][word[i]]
                if not nxt:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self._coincide(f, b)
                return
            while j >= i:
                prv = tbl[b][word[j] ^ 1]
                if not prv:
                    break
                b = prv
                j -= 1
            if j < i:
                self._coincide(f, b)
                return
            if j == i:
                tbl[f][word[i]] = b
                tbl[b][word[i] ^ 1] = f
                if self.felsch:
                    self.dstack.append((f, word[i]))
                    self.dstack.append((b, word[i] ^ 1))
                return
            self._define(f, word[i])

    def _scan_check(self, a: int, word: WordInts):
        """Scan without defining; applies free deductions and coincidences."""
        tbl = self.tbl
        i, j = 0, len(word) - 1
        f = b = a
        while i <= j:
            nxt = tbl[f][word[i]]
            if not nxt:
                break
            f = nxt
            i += 1
        if i > j:
            if f != b:
                self._coincide(f, b)
            return
        while j >= i:
            prv = tbl[b][word[j] ^ 1]
            if not prv:
                break
            b = prv
            j -= 1
        if j < i:
            self._coincide(f, b)
        elif j == i:
            tbl[f][word[i]] = b
            tbl[b][word[i] ^ 1] = f
            if self.felsch:
                self.dstack.append((f, word[i]))
                self.dstack.append((b, word[i] ^ 1))

    # -- strategies ----------------------------------------------------------

    def _run_hlt(self) -> bool:
        while True:
            try:
                for w in self.subs:
                    self._scan_and_fill(1, w)
                a = 1
                while a < len(self.tbl):
                    if self.p[a] == a:
                        for w in self.rels:
                            self._scan_and_fill(a, w)
                            if self.p[a] != a:
                                break
                        if self.p[a] == a:
                            row = self.tbl[a]
                            for c in range(self.ncols):
                                if not row[c]:
                                    self._define(a, c)
                    a += 1
                return True
            except _TableFull:
                if not self._lookahead():
                    return False
                # restart on the compacted table; closed scans stay closed

    def _lookahead(self) -> bool:
        before = self.live
        a = 1
        while a < len(self.tbl):
            if self.p[a] == a:
                for w in self.rels:
                    if self.p[a] != a:
                        break
                    self._scan_check(a, w)
            a += 1
        self._compress()
        freed = before - self.live
        return len(self.tbl) - 1 < self.max and freed >= max(1, self.max // 100)

    def _run_felsch(self) -> bool:
        while True:
            try:
                for w in self.subs:
                    self._scan_and_fill(1, w)
                self._process_deductions()
                a = 1
                while a < len(self.tbl):
                    if self.p[a] == a:
                        c = 0
                        while c < self.ncols:
                            if self.p[a] != a:
                                break
                            if not self.tbl[a][c]:
                                self._define(a, c)
                                self._process_deductions()
                            c += 1
                    a += 1
                return True
            except _TableFull:
                self.dstack.clear()
                self._compress()
                if len(self.tbl) - 1 >= self.max:
                    return False
                # re-seed the deduction stack so propagation stays exhaustive
                for a in range(1, len(self.tbl)):
                    row = self.tbl[a]
                    for c in range(self.ncols):
                        if row[c]:
                            self.dstack.append((a, c))

    def _process_deductions(self):
        dstack, p = self.dstack, self.p
        ded = self.ded
        while dstack:
            a, c = dstack.pop()
            if p[a] != a:
                continue
            for w in ded.get(c, ()):
                self._scan_check(a, w)
                if p[a] != a:
                    break

    # -- housekeeping ----------------------------------------------------

    def _compress(self):
        tbl, p = self.tbl, self.p
        remap = [0] * len(tbl)
        new = 0
        for a in range(1, len(tbl)):
            if p[a] == a:
                new += 1
                remap[a] = new
        rows: List[List[int]] = [[]]
        for a in range(1, len(tbl)):
            if p[a] == a:
                rows.append([remap[self._rep(e)] if e else 0 for e in tbl[a]])
        self.tbl = rows
        self.p = list(range(len(rows)))
        self.live = new

    def _standardize(self):
        """Renumber cosets in first-visit order scanning columns in order."""
        tbl = self.tbl
        n = len(tbl) - 1
        label = [0] * (n + 1)
        label[1] = 1
        order = [1]
        nxt = 1
        for a in order:
            row = tbl[a]
            for c in range(self.ncols):
                b = row[c]
                if not label[b]:
                    nxt += 1
                    label[b] = nxt
                    order.append(b)
        rows: List[List[int]] = [[]] * (n + 1)
        for a in range(1, n + 1):
            rows[label[a]] = [label[e] for e in tbl[a]]
        self.tbl = rows

    def run(self) -> bool:
        ok = self._run_felsch() if self.felsch else self._run_hlt()
        self._compress()
        if ok:
            self._standardize()
        return ok


def todd_coxeter(
    pres: FinitePresentation,
    max_cosets: int = 1_000_000,
    strategy: str = "hlt",
) -> CosetTable:
    """Enumerate cosets of the presentation's subgroup.

    Returns a complete standardized table whose count is the subgroup
    index, or an overflow table when ``max_cosets`` live cosets were not
    enough (the enumeration is a semi-decision procedure: overflow means
    undecided).
    """
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    enum = _Enumerator(pres, max_cosets, strategy == "felsch")
    if enum.run():
        rows = tuple(tuple(e - 1 for e in row) for row in enum.tbl[1:])
        table = CosetTable(pres.generators, rows, "complete", len(rows), enum.defined)
        audit_table(table, pres)
        return table
    rows = tuple(
        tuple(e - 1 if e else -1 for e in row) for row in enum.tbl[1:]
    )
    return CosetTable(pres.generators, rows, "overflow", len(rows), enum.defined)


def audit_table(table: CosetTable, pres: FinitePresentation):
    """Full soundness audit of a complete table; raises on any violation.

    Checks: every entry defined and in range, generator columns are
    mutually inverse bijections, every relator traces to its starting
    coset from every coset, and subgroup generators fix coset 0.
    """
    if not table.complete:
        raise ValueError("cannot audit an incomplete table")
    count = table.count
    ncols = 2 * len(table.generators)
    if len(table.rows) != count:
        raise ValueError("row count does not match coset count")
    for i, row in enumerate(table.rows):
        if len(row) != ncols:
            raise ValueError(f"row {i} has wrong width")
        for c, e in enumerate(row):
            if not 0 <= e < count:
                raise ValueError(f"entry ({i},{c}) out of range: {e}")
            if table.rows[e][c ^ 1] != i:
                raise ValueError(f"entry ({i},{c}) lacks an inverse entry")
    for c in range(ncols):
        if sorted(row[c] for row in table.rows) != list(range(count)):
            raise ValueError(f"column {c} is not a permutation")
    for r in pres.relators:
        for i in range(count):
            if table.trace(i, r) != i:
                raise ValueError(
                    f"relator {pres.word_text(r)} does not close at coset {i}"
                )
    for s in pres.subgroup:
        if table.trace(0, s) != 0:
            raise ValueError(
                f"subgroup generator {pres.word_text(s)} does not fix coset 0"
            )


def generator_permutation(table: CosetTable, gen: str) -> Tuple[int, ...]:
    """The permutation of the cosets induced by one generator's column."""
    if not table.complete:
        raise ValueError("generator_permutation needs a complete table")
    i = table.generators.index(gen)
    return tuple(row[2 * i] for row in table.rows)


def semidirect_presentation(n: int, k: int, l: int) -> FinitePresentation:
    """The two-generator presentation (a, x : a^n, x a^k x a^{l-k} x a^{-l}).

    This presents the extension of the cyclic group of order n by
    G_n(k, l) in which conjugation by a realizes the shift.  Exponents
    of a are normalized into [0, n).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k %= n
    l %= n
    a, x = 1, 2
    rel_a = (a,) * n
    rel_w = (
        (x,) + (a,) * k + (x,) + (a,) * ((l - k) % n) + (x,) + (a,) * ((-l) % n)
    )
    return FinitePresentation(("a", "x"), (rel_a, rel_w))


def relative_to_presentation(rel_word, n: int) -> FinitePresentation:
    """Lift a relative word W to the ordinary presentation (a, x : a^n, W)."""
    from .relative import lift

    return lift(rel_word, n)
