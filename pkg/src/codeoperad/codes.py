"""Doubly-even binary linear codes, their enumeration, and coordinate permutations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import CapExceeded, DegreeMismatch, LengthMismatch, LengthTooLarge
from .gf2 import BitWord, GF2Matrix, _rref_bits

ENUMERATION_LIMIT = 8
AUTOMORPHISM_LIMIT = 8


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the image tuple (images[i-1] = image of i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cycle in cycles:
            pts = list(cycle)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Left-to-right composition: apply self first, then other."""
        if self.degree != other.degree:
            raise DegreeMismatch(f"{self.degree} != {other.degree}")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points, in deterministic order."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cycle.append(j)
                seen[j - 1] = True
                j = self(j)
            out.append(tuple(cycle))
        return out


@dataclass(frozen=True)
class BinaryCode:
    """A linear subspace of F2^N in canonical (RREF, no zero rows) generator form."""

    length: int
    generators: GF2Matrix

    def __post_init__(self):
        if self.generators.width != self.length:
            raise LengthMismatch(
                f"generator width {self.generators.width} != length {self.length}"
            )
        pivot_mask = 0
        last = 0
        for row in self.generators.rows:
            if row.bits == 0:
                raise ValueError("zero generator row; use make_code")
            p = row.bits & -row.bits
            if p <= last:
                raise ValueError("generators not in RREF; use make_code")
            last = p
            pivot_mask |= p
        for row in self.generators.rows:
            if row.bits & pivot_mask != row.bits & -row.bits:
                raise ValueError("generators not in RREF; use make_code")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.length, self.generators.rows))
            self.__dict__["_hash"] = h
        return h

    @property
    def dimension(self) -> int:
        return len(self.generators.rows)

    def contains(self, w: BitWord) -> bool:
        if w.length != self.length:
            return False
        b = w.bits
        for row in self.generators.rows:
            p = row.bits & -row.bits
            if b & p:
                b ^= row.bits
        return b == 0

    def is_trivial(self) -> bool:
        return self.dimension == 0

    def support_bits(self) -> int:
        """OR of all codewords: the coordinates the code actually uses."""
        out = 0
        for row in self.generators.rows:
            out |= row.bits
        return out


def make_code(length: int, generators: Iterable[BitWord]) -> BinaryCode:
    """Canonicalize a generating set into a BinaryCode."""
    gens = list(generators)
    for g in gens:
        if g.length != length:
            raise LengthMismatch(f"generator length {g.length} != {length}")
    reduced, _ = _rref_bits([g.bits for g in gens], length)
    rows = tuple(BitWord(length, b) for b in reduced)
    return BinaryCode(length, GF2Matrix(length, rows))


def code_from_bits(length: int, bits: Iterable[int]) -> BinaryCode:
    """make_code over raw int rows (hot path for operad compositions)."""
    reduced, _ = _rref_bits(list(bits), length)
    rows = tuple(BitWord(length, b) for b in reduced)
    return BinaryCode(length, GF2Matrix(length, rows))


def trivial_code(length: int) -> BinaryCode:
    return BinaryCode(length, GF2Matrix(length))


@lru_cache(maxsize=2048)
def codewords(code: BinaryCode) -> tuple[BitWord, ...]:
    """All 2**dim codewords, sorted lexicographically by textual form."""
    words = [0]
    for row in code.generators.rows:
        words += [w ^ row.bits for w in words]
    return tuple(sorted(BitWord(code.length, w) for w in words))


def weight(w: BitWord) -> int:
    """Number of set coordinates."""
    return w.bits.bit_count()


def is_doubly_even(code: BinaryCode) -> bool:
    """True iff every codeword has weight divisible by 4.

    Uses the generator criterion: every generator has weight = 0 mod 4 and
    every generator pair meets in an even number of coordinates.  This is
    equivalent to the spanwise condition because
    wt(u+v) = wt(u) + wt(v) - 2*wt(u&v), and the parity of wt(u&v) is
    bilinear in u and v.
    """
    rows = code.generators.rows
    for g in rows:
        if g.weight() % 4:
            return False
    for g, h in itertools.combinations(rows, 2):
        if (g.bits & h.bits).bit_count() % 2:
            return False
    return True


def is_doubly_even_exhaustive(code: BinaryCode) -> bool:
    """Spanwise weight check; the independent slow route for testing."""
    return all(w.weight() % 4 == 0 for w in codewords(code))


def enumerate_doubly_even(
    n: int, cap: int = 1_000_000, limit: int = ENUMERATION_LIMIT
) -> list[BinaryCode]:
    """All doubly-even codes of length n, sorted by (dimension, generator strings).

    Breadth-first over dimensions: every doubly-even code of dimension d+1
    is an extension of one of dimension d by a compatible weight-4k word,
    so growing each code by every compatible word finds everything.
    """
    if n > limit:
        raise LengthTooLarge(f"length {n} exceeds enumeration limit {limit}")
    candidates = [
        BitWord(n, b) for b in range(1, 1 << n) if b.bit_count() % 4 == 0
    ]
    found = {trivial_code(n)}
    frontier = [trivial_code(n)]
    while frontier:
        next_frontier = []
        for code in frontier:
            rows = code.generators.rows
            for w in candidates:
                if code.contains(w):
                    continue
                if any((w.bits & g.bits).bit_count() % 2 for g in rows):
                    continue
                grown = make_code(n, rows + (w,))
                if grown not in found:
                    found.add(grown)
                    next_frontier.append(grown)
                    if len(found) > cap:
                        raise CapExceeded(f"more than {cap} codes at length {n}")
        frontier = next_frontier
    return sorted(found, key=_code_sort_key)


def _code_sort_key(code: BinaryCode):
    return (code.dimension, tuple(str(g) for g in code.generators.rows))


def permute_word(w: BitWord, s: Permutation) -> BitWord:
    """Move coordinate i to position s(i)."""
    if s.degree != w.length:
        raise DegreeMismatch(f"degree {s.degree} != length {w.length}")
    bits = 0
    b = w.bits
    for i in range(1, w.length + 1):
        if b >> (i - 1) & 1:
            bits |= 1 << (s(i) - 1)
    return BitWord(w.length, bits)


def permute_code(code: BinaryCode, s: Permutation) -> BinaryCode:
    """The image code {s(c) : c in code}, recanonicalized."""
    if s.degree != code.length:
        raise DegreeMismatch(f"degree {s.degree} != length {code.length}")
    return make_code(code.length, [permute_word(g, s) for g in code.generators.rows])


def code_automorphisms(code: BinaryCode) -> list[Permutation]:
    """All coordinate permutations preserving the code (brute force over S_N)."""
    if code.length > AUTOMORPHISM_LIMIT:
        raise LengthTooLarge(
            f"length {code.length} exceeds automorphism limit {AUTOMORPHISM_LIMIT}"
        )
    n = code.length
    gens = [g.bits for g in code.generators.rows]
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        ok = True
        for g in gens:
            moved = 0
            b = g
            while b:
                low = b & -b
                moved |= 1 << (images[low.bit_length() - 1] - 1)
                b ^= low
            if not code.contains(BitWord(n, moved)):
                ok = False
                break
        if ok:
            out.append(Permutation(images))
    return out


def mulclose(
    generators: Iterable[Permutation], cap: int | None = None
) -> set[Permutation] | None:
    """Closure of a set of permutations under composition; None once cap is hit."""
    gens = list(generators)
    elements = set(gens)
    frontier = list(elements)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a.then(b)
                if c not in elements:
                    elements.add(c)
                    new.append(c)
                    if cap is not None and len(elements) > cap:
                        return None
        frontier = new
    return elements


def code_to_record(code: BinaryCode) -> dict:
    """JSON-ready record: {"length": N, "generators": ["0101...", ...]}."""
    return {
        "length": code.length,
        "generators": [str(g) for g in code.generators.rows],
    }


def code_from_record(record: dict) -> BinaryCode:
    length = record["length"]
    gens = [BitWord.from_string(s) for s in record["generators"]]
    for g in gens:
        if g.length != length:
            raise LengthMismatch(f"generator length {g.length} != {length}")
    return make_code(length, gens)
