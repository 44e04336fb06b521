"""Non-unital operad structure on doubly-even codes: composition and insertions.

The composition gamma substitutes an inner code into each slot of an outer
code.  The literal substitution set (gamma_raw_set) is a union of
block-supported subspaces and is not closed under XOR in general, so the
composed code is its linear span; the span equals the blockwise embedding
of the inner codes over the support of the outer code, which is how it is
computed here.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .codes import BinaryCode, Permutation, code_from_bits, codewords, trivial_code
from .errors import CapExceeded, DegreeMismatch, IndexOutOfRange, LengthMismatch
from .gf2 import BitWord


def _block_offsets(blocks: Sequence[int]) -> list[int]:
    offsets = [0]
    for k in blocks:
        offsets.append(offsets[-1] + k)
    return offsets


def _check_arity(outer: BinaryCode, inners: Sequence[BinaryCode]) -> None:
    if outer.length != len(inners):
        raise LengthMismatch(
            f"outer length {outer.length} != number of inners {len(inners)}"
        )


def gamma_raw_set(
    outer: BinaryCode, inners: Sequence[BinaryCode], cap: int = 1 << 16
) -> set[BitWord]:
    """The literal substitution set: block i is an inner codeword where the
    outer codeword has a 1, and the zero block where it has a 0."""
    _check_arity(outer, inners)
    size = 1 << outer.dimension
    for inner in inners:
        size *= 1 << inner.dimension
    if size > cap:
        raise CapExceeded(f"raw set bound {size} exceeds cap {cap}")
    offsets = _block_offsets([inner.length for inner in inners])
    total = offsets[-1]
    inner_words = [codewords(inner) for inner in inners]
    out: set[BitWord] = set()
    for c in codewords(outer):
        blocks = [0]
        for i in range(1, outer.length + 1):
            if c.bits >> (i - 1) & 1:
                off = offsets[i - 1]
                blocks = [
                    b | (w.bits << off) for b in blocks for w in inner_words[i - 1]
                ]
        out.update(BitWord(total, b) for b in blocks)
    return out


def gamma(outer: BinaryCode, inners: Sequence[BinaryCode]) -> BinaryCode:
    """Operadic composition: the span of gamma_raw_set.

    The span is generated by the inner generators embedded in every block
    that some outer codeword supports.
    """
    _check_arity(outer, inners)
    offsets = _block_offsets([inner.length for inner in inners])
    total = offsets[-1]
    supp = outer.support_bits()
    gens = []
    for i in range(1, outer.length + 1):
        if supp >> (i - 1) & 1:
            off = offsets[i - 1]
            gens.extend(g.bits << off for g in inners[i - 1].generators.rows)
    return code_from_bits(total, gens)


def insert(outer: BinaryCode, i: int, inner: BinaryCode) -> BinaryCode:
    """Partial composition: substitute inner into slot i of outer.

    Span of the words (c_1,...,c_{i-1}, c_i*c', c_{i+1},...,c_N) over outer
    codewords c and inner codewords c'.  The span keeps the other outer
    coordinates verbatim, so the result need not be doubly even; only the
    fully composed gamma is.
    """
    if not 1 <= i <= outer.length:
        raise IndexOutOfRange(f"slot {i} outside 1..{outer.length}")
    m = inner.length
    lo_mask = (1 << (i - 1)) - 1
    gens = []
    for g in outer.generators.rows:
        b = g.bits
        gens.append((b & lo_mask) | ((b >> i) << (i - 1 + m)))
    if outer.support_bits() >> (i - 1) & 1:
        gens.extend(h.bits << (i - 1) for h in inner.generators.rows)
    return code_from_bits(outer.length + m - 1, gens)


def iterated_insert(outer: BinaryCode, inners: Sequence[BinaryCode]) -> BinaryCode:
    """(..((outer o_N L_N) o_{N-1} L_{N-1}) .. o_1 L_1); agrees with gamma."""
    _check_arity(outer, inners)
    code = outer
    for i in range(outer.length, 0, -1):
        code = insert(code, i, inners[i - 1])
    return code


def block_permutation(s: Permutation, blocks: Sequence[int]) -> Permutation:
    """The permutation of sum(blocks) coordinates moving block i to position s(i),
    order preserved within blocks."""
    if s.degree != len(blocks):
        raise DegreeMismatch(f"degree {s.degree} != {len(blocks)} blocks")
    offsets = _block_offsets(blocks)
    new_offsets = [0] * len(blocks)
    for i in range(1, len(blocks) + 1):
        new_offsets[i - 1] = sum(
            blocks[j - 1] for j in range(1, len(blocks) + 1) if s(j) < s(i)
        )
    images = [0] * offsets[-1]
    for i in range(1, len(blocks) + 1):
        for t in range(1, blocks[i - 1] + 1):
            images[offsets[i - 1] + t - 1] = new_offsets[i - 1] + t
    return Permutation(tuple(images))


def within_block_permutation(
    perms: Sequence[Permutation], blocks: Sequence[int]
) -> Permutation:
    """The block-diagonal permutation acting as perms[i] inside block i."""
    if len(perms) != len(blocks):
        raise DegreeMismatch(f"{len(perms)} permutations for {len(blocks)} blocks")
    for p, k in zip(perms, blocks):
        if p.degree != k:
            raise DegreeMismatch(f"degree {p.degree} != block size {k}")
    offsets = _block_offsets(blocks)
    images = [0] * offsets[-1]
    for i, p in enumerate(perms):
        for t in range(1, blocks[i] + 1):
            images[offsets[i] + t - 1] = offsets[i] + p(t)
    return Permutation(tuple(images))


def is_xor_closed(words: Iterable[BitWord]) -> bool:
    """Whether a set of words is closed under coordinatewise XOR."""
    bag = {w.bits for w in words}
    items = sorted(bag)
    return all(a ^ b in bag for a in items for b in items)


def trivial_inners(n: int) -> list[BinaryCode]:
    """n copies of the length-1 trivial code (the would-be units)."""
    return [trivial_code(1)] * n
