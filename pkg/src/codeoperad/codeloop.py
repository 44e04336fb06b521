"""Code loops: central extensions of doubly-even codes twisted by a cocycle.

Elements are pairs (sign, codeword) with product
    (e, u) * (d, v) = (e + d + theta(u, v), u + v)
over F2 signs.  The cocycle theta is any solution of the affine system

    theta(u, u)                                     = wt(u)/4        mod 2
    theta(u, v) + theta(v, u)                       = wt(u & v)/2    mod 2
    theta(u, v) + theta(u+v, w) + theta(v, w)
                + theta(u, v+w)                     = wt(u & v & w)  mod 2

so that squares, commutators and associators of the loop realize the three
classical functions on the code.  Doubly-evenness makes the right-hand
sides integral, and a solution always exists for such codes; the solver
failing is a bug signal, not an expected condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import BinaryCode, codewords, is_doubly_even
from .errors import CapExceeded, ElementNotInLoop, NoCocycle, NotDoublyEven
from .gf2 import BitWord, GF2Matrix, solve_affine

ELEMENT_CAP = 256
IDENTITY_CHECK_CAP = 512


def alpha(u: BitWord) -> int:
    """Square sign: wt(u)/4 mod 2."""
    return (u.weight() // 4) & 1


def phi(u: BitWord, v: BitWord) -> int:
    """Commutator sign: wt(u & v)/2 mod 2."""
    return ((u.bits & v.bits).bit_count() // 2) & 1


def psi(u: BitWord, v: BitWord, w: BitWord) -> int:
    """Associator sign: wt(u & v & w) mod 2."""
    return (u.bits & v.bits & w.bits).bit_count() & 1


@dataclass(frozen=True)
class Cocycle:
    """A total map theta on ordered codeword pairs, satisfying the three invariants."""

    code: BinaryCode
    table: tuple[tuple[int, ...], ...]  # indexed by codeword positions

    def theta(self, u: BitWord, v: BitWord) -> int:
        idx = _codeword_index(self.code)
        return self.table[idx[u.bits]][idx[v.bits]]


def _codeword_index(code: BinaryCode) -> dict[int, int]:
    return {w.bits: k for k, w in enumerate(codewords(code))}


def _cocycle_rows(code: BinaryCode) -> tuple[list[BitWord], list[int]]:
    """Constraint rows and right-hand bits of the theta system."""
    words = codewords(code)
    m = len(words)
    idx = {w.bits: k for k, w in enumerate(words)}

    def var(u: BitWord, v: BitWord) -> int:
        return idx[u.bits] * m + idx[v.bits]

    n_vars = m * m
    rows: list[BitWord] = []
    rhs: list[int] = []
    for u in words:
        rows.append(BitWord(n_vars, 1 << var(u, u)))
        rhs.append(alpha(u))
    for u, v in itertools.combinations(words, 2):
        rows.append(BitWord(n_vars, (1 << var(u, v)) | (1 << var(v, u))))
        rhs.append(phi(u, v))
    for u in words:
        for v in words:
            for w in words:
                bits = 0
                for pair in (var(u, v), var(u ^ v, w), var(v, w), var(u, v ^ w)):
                    bits ^= 1 << pair
                if bits:
                    rows.append(BitWord(n_vars, bits))
                    rhs.append(psi(u, v, w))
    return rows, rhs


def build_cocycle(code: BinaryCode, element_cap: int = ELEMENT_CAP) -> Cocycle:
    """Solve the theta system; the canonical solution has free variables 0."""
    if not is_doubly_even(code):
        raise NotDoublyEven(f"code of length {code.length} is not doubly even")
    words = codewords(code)
    m = len(words)
    if m > element_cap:
        raise CapExceeded(f"{m} codewords exceed element cap {element_cap}")
    rows, rhs = _cocycle_rows(code)
    a = GF2Matrix(m * m, tuple(rows))
    b_bits = 0
    for k, bit in enumerate(rhs):
        b_bits |= bit << k
    solution = solve_affine(a, BitWord(len(rows), b_bits))
    if solution is None:
        raise NoCocycle("theta system inconsistent for a doubly-even code")
    particular, _ = solution
    return _cocycle_from_vector(code, particular)


def _cocycle_from_vector(code: BinaryCode, vec: BitWord) -> Cocycle:
    m = len(codewords(code))
    table = tuple(
        tuple(vec.get(i * m + j + 1) for j in range(m)) for i in range(m)
    )
    return Cocycle(code, table)


def cocycle_solutions(code: BinaryCode, element_cap: int = ELEMENT_CAP) -> list[Cocycle]:
    """The canonical cocycle plus one distinct solution per nullspace vector."""
    if not is_doubly_even(code):
        raise NotDoublyEven(f"code of length {code.length} is not doubly even")
    m = len(codewords(code))
    if m > element_cap:
        raise CapExceeded(f"{m} codewords exceed element cap {element_cap}")
    rows, rhs = _cocycle_rows(code)
    a = GF2Matrix(m * m, tuple(rows))
    b_bits = 0
    for k, bit in enumerate(rhs):
        b_bits |= bit << k
    solution = solve_affine(a, BitWord(len(rows), b_bits))
    if solution is None:
        raise NoCocycle("theta system inconsistent for a doubly-even code")
    particular, basis = solution
    out = [_cocycle_from_vector(code, particular)]
    for v in basis:
        out.append(_cocycle_from_vector(code, particular ^ v))
    return out


@dataclass(frozen=True)
class LoopElement:
    """Sign stored as an F2 bit; rendered as +1/-1 externally."""

    s: int
    word: BitWord

    @property
    def sign(self) -> int:
        return -1 if self.s else 1

    def __str__(self) -> str:
        return f"({'-' if self.s else '+'},{self.word})"


@dataclass(frozen=True)
class CodeLoop:
    code: BinaryCode
    cocycle: Cocycle

    @property
    def order(self) -> int:
        return 2 << self.code.dimension

    def elements(self) -> list[LoopElement]:
        """Deterministic order: sign +1 before -1, codewords lexicographic."""
        words = codewords(self.code)
        return [LoopElement(s, w) for s in (0, 1) for w in words]

    def identity(self) -> LoopElement:
        return LoopElement(0, BitWord(self.code.length))


def build_loop(code: BinaryCode, element_cap: int = ELEMENT_CAP) -> CodeLoop:
    return CodeLoop(code, build_cocycle(code, element_cap))


def loop_product(lp: CodeLoop, x: LoopElement, y: LoopElement) -> LoopElement:
    for z in (x, y):
        if z.s not in (0, 1) or not lp.code.contains(z.word):
            raise ElementNotInLoop(f"{z} is not in the loop")
    return LoopElement(
        (x.s + y.s + lp.cocycle.theta(x.word, y.word)) & 1, x.word ^ y.word
    )


def _product_table(lp: CodeLoop) -> tuple[list[LoopElement], list[list[int]]]:
    elements = lp.elements()
    idx = {e: k for k, e in enumerate(elements)}
    table = [
        [idx[loop_product(lp, x, y)] for y in elements] for x in elements
    ]
    return elements, table


def is_moufang(lp: CodeLoop) -> bool:
    """((x*y)*x)*z = x*(y*(x*z)) over all element triples, exhaustively."""
    if lp.order > IDENTITY_CHECK_CAP:
        raise CapExceeded(f"order {lp.order} exceeds cap {IDENTITY_CHECK_CAP}")
    _, t = _product_table(lp)
    n = len(t)
    for x in range(n):
        for y in range(n):
            xyx = t[t[x][y]][x]
            for z in range(n):
                if t[xyx][z] != t[x][t[y][t[x][z]]]:
                    return False
    return True


def is_associative(lp: CodeLoop) -> bool:
    """(x*y)*z = x*(y*z) over all triples, exhaustively."""
    if lp.order > IDENTITY_CHECK_CAP:
        raise CapExceeded(f"order {lp.order} exceeds cap {IDENTITY_CHECK_CAP}")
    _, t = _product_table(lp)
    n = len(t)
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


@dataclass(frozen=True)
class ExtensionReport:
    """Certificate for the central extension of the sign group by the code."""

    z_order: int
    z_central: bool
    projection_hom: bool
    kernel_is_z: bool
    quotient_matches_code: bool

    @property
    def ok(self) -> bool:
        return (
            self.z_order == 2
            and self.z_central
            and self.projection_hom
            and self.kernel_is_z
            and self.quotient_matches_code
        )


def verify_extension(lp: CodeLoop) -> ExtensionReport:
    elements = lp.elements()
    zero = BitWord(lp.code.length)
    z = [e for e in elements if e.word.bits == 0]
    z_order = len(z)
    z_central = True
    for c in z:
        for x in elements:
            if loop_product(lp, c, x) != loop_product(lp, x, c):
                z_central = False
            for y in elements:
                lhs = loop_product(lp, loop_product(lp, c, x), y)
                rhs = loop_product(lp, c, loop_product(lp, x, y))
                if lhs != rhs:
                    z_central = False
                lhs = loop_product(lp, loop_product(lp, x, c), y)
                rhs = loop_product(lp, x, loop_product(lp, c, y))
                if lhs != rhs:
                    z_central = False
    projection_hom = all(
        loop_product(lp, x, y).word == x.word ^ y.word
        for x in elements
        for y in elements
    )
    kernel_is_z = all((e.word == zero) == (e in z) for e in elements)
    quotient_matches_code = {e.word for e in elements} == set(codewords(lp.code))
    return ExtensionReport(
        z_order, z_central, projection_hom, kernel_is_z, quotient_matches_code
    )


def cayley_table(lp: CodeLoop) -> list[list[LoopElement]]:
    """Full multiplication table over the deterministic element order."""
    if lp.order > IDENTITY_CHECK_CAP:
        raise CapExceeded(f"order {lp.order} exceeds cap {IDENTITY_CHECK_CAP}")
    elements = lp.elements()
    return [[loop_product(lp, x, y) for y in elements] for x in elements]
