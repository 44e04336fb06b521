"""Exact linear algebra over F2 on bitpacked words.

Words are stored as Python ints, so any length works with the same code
path.  Coordinate 1 is the least significant bit; the textual form
"c1c2...cN" is printed left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapExceeded, LengthMismatch


@dataclass(frozen=True)
class BitWord:
    """A length-N vector over F2, packed into an int."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set outside coordinates 1..length")

    @classmethod
    def from_string(cls, text: str) -> BitWord:
        """Parse "c1c2...cN" (coordinate 1 first)."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return cls(len(text), bits)

    @classmethod
    def unit(cls, length: int, i: int) -> BitWord:
        """The word with only coordinate i set."""
        if not 1 <= i <= length:
            raise ValueError(f"coordinate {i} outside 1..{length}")
        return cls(length, 1 << (i - 1))

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def __str__(self) -> str:
        return self.to_string()

    def get(self, i: int) -> int:
        """Coordinate i (1-based)."""
        if not 1 <= i <= self.length:
            raise ValueError(f"coordinate {i} outside 1..{self.length}")
        return self.bits >> (i - 1) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.length + 1) if self.bits >> (i - 1) & 1)

    def __xor__(self, other: BitWord) -> BitWord:
        if self.length != other.length:
            raise LengthMismatch(f"{self.length} != {other.length}")
        return BitWord(self.length, self.bits ^ other.bits)

    def __and__(self, other: BitWord) -> BitWord:
        if self.length != other.length:
            raise LengthMismatch(f"{self.length} != {other.length}")
        return BitWord(self.length, self.bits & other.bits)

    def __lt__(self, other: BitWord) -> bool:
        # Lexicographic on the textual form (shorter lengths first).
        return (self.length, self.to_string()) < (other.length, other.to_string())


def dot(u: BitWord, v: BitWord) -> int:
    """Parity of the coordinatewise product."""
    if u.length != v.length:
        raise LengthMismatch(f"{u.length} != {v.length}")
    return (u.bits & v.bits).bit_count() & 1


@dataclass(frozen=True)
class GF2Matrix:
    """Rows of equal-length BitWords; width is explicit so empty matrices work."""

    width: int
    rows: tuple[BitWord, ...] = ()

    def __post_init__(self):
        for r in self.rows:
            if r.length != self.width:
                raise LengthMismatch(f"row length {r.length} != width {self.width}")

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> GF2Matrix:
        words = tuple(BitWord.from_string(r) for r in rows)
        if not words:
            raise ValueError("width unknown for an empty matrix; use GF2Matrix(width)")
        return cls(words[0].length, words)


@dataclass(frozen=True)
class RrefResult:
    reduced: GF2Matrix
    rank: int
    pivots: tuple[int, ...]


def _rref_bits(rows: list[int], width: int) -> tuple[list[int], list[int]]:
    """Row reduce raw int rows; returns (nonzero reduced rows, 1-based pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    row = 0
    for col in range(width):
        mask = 1 << col
        pivot = None
        for r in range(row, len(work)):
            if work[r] & mask:
                pivot = r
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        for r in range(len(work)):
            if r != row and work[r] & mask:
                work[r] ^= work[row]
        pivots.append(col + 1)
        row += 1
        if row == len(work):
            break
    return work[:row], pivots


def rref(m: GF2Matrix) -> RrefResult:
    """Reduced row-echelon form with zero rows dropped; row space is preserved."""
    reduced, pivots = _rref_bits([r.bits for r in m.rows], m.width)
    rows = tuple(BitWord(m.width, b) for b in reduced)
    return RrefResult(GF2Matrix(m.width, rows), len(pivots), tuple(pivots))


def solve_affine(
    a: GF2Matrix, b: BitWord
) -> Optional[tuple[BitWord, list[BitWord]]]:
    """Solve a.x = b; returns (particular, nullspace basis) or None if inconsistent.

    The particular solution sets every free variable to 0, so it is
    deterministic for a fixed row order.  The solution set is
    particular + span(basis), of size 2**len(basis).
    """
    if b.length != len(a.rows):
        raise LengthMismatch(f"rhs length {b.length} != row count {len(a.rows)}")
    n = a.width
    aug = [row.bits | (b.get(k + 1) << n) for k, row in enumerate(a.rows)]
    reduced, pivots = _rref_bits(aug, n)
    for r in reduced:
        if r == 1 << n:
            return None
    particular = 0
    for r, p in zip(reduced, pivots):
        if r >> n & 1:
            particular |= 1 << (p - 1)
    pivot_set = set(pivots)
    basis = []
    for free in range(1, n + 1):
        if free in pivot_set:
            continue
        v = 1 << (free - 1)
        for r, p in zip(reduced, pivots):
            if r >> (free - 1) & 1:
                v |= 1 << (p - 1)
        basis.append(BitWord(n, v))
    return BitWord(n, particular), basis


def matvec(a: GF2Matrix, x: BitWord) -> BitWord:
    """a.x as a word over the constraint rows."""
    if x.length != a.width:
        raise LengthMismatch(f"vector length {x.length} != width {a.width}")
    out = 0
    for k, row in enumerate(a.rows):
        out |= ((row.bits & x.bits).bit_count() & 1) << k
    return BitWord(len(a.rows), out)


def span_closure(
    generators: Iterable[BitWord], cap: int, length: int | None = None
) -> set[BitWord]:
    """All 2**rank words spanned by the generators, including zero."""
    gens = list(generators)
    if length is None:
        if not gens:
            raise ValueError("length required for an empty generator list")
        length = gens[0].length
    for g in gens:
        if g.length != length:
            raise LengthMismatch(f"{g.length} != {length}")
    basis, _ = _rref_bits([g.bits for g in gens], length)
    if 1 << len(basis) > cap:
        raise CapExceeded(f"span size 2^{len(basis)} exceeds cap {cap}")
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return {BitWord(length, w) for w in words}
