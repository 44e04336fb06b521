"""Invariant sweeps over enumerated codes, shared by the CLI and the test suite.

Every sweep is exhaustive within its stated bounds and fully deterministic:
the corpus comes from enumerate_doubly_even (already sorted), compositions
are generated in lexicographic order, and failures are recorded as stable
strings.

Bounds, and why they are what they are:

* insert associativity runs over all ordered code triples from the corpus,
  every insertion position; with codes of length <= 6 the composed length
  is at most 6+6+6-2 = 16.
* gamma vs iterated insertion runs over all compositions (outer; inners)
  with composed length <= gamma_limit; the recursion carries the partial
  iterated insertion so shared prefixes are inserted once.
* equivariance permutations range over the full symmetric group when its
  degree is <= 4 and over a generating set (a transposition and the full
  cycle) above that; sigma -> induced-block-permutation is a homomorphism,
  so the identities for generators imply them for the whole group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .adinkra import (
    build_adinkra,
    chromotopology_from_code,
    color_permutation_action,
    solve_dashing,
    translation_action,
    two_color_cycles,
    verify_chromotopology,
    verify_dashing,
    _dashing_system,
    adinkra_from_record,
    adinkra_to_record,
)
from .codes import (
    BinaryCode,
    Permutation,
    code_automorphisms,
    code_from_record,
    code_to_record,
    codewords,
    enumerate_doubly_even,
    is_doubly_even,
    is_doubly_even_exhaustive,
    make_code,
    permute_code,
    trivial_code,
)
from .codeloop import (
    LoopElement,
    alpha,
    build_loop,
    cayley_table,
    cocycle_solutions,
    is_associative,
    is_moufang,
    loop_product,
    phi,
    psi,
    verify_extension,
)
from .dessin import (
    dessin_from_chromotopology,
    dessin_from_record,
    dessin_to_record,
    genus,
    is_transitive,
    sigma_infinity,
    verify_cycle_structure,
)
from .gf2 import BitWord
from .operad import (
    block_permutation,
    gamma,
    gamma_raw_set,
    insert,
    is_xor_closed,
    trivial_inners,
    within_block_permutation,
)

MAX_FAILURES = 20


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


class _Recorder:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, message) -> None:
        """message may be a callable so hot sweeps skip formatting on success."""
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(message() if callable(message) else message)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checked, tuple(self.failures))


def _fmt(code: BinaryCode) -> str:
    gens = ",".join(str(g) for g in code.generators.rows)
    return f"[{code.length}:{gens}]"


@lru_cache(maxsize=16)
def _corpus(length: int) -> tuple[BinaryCode, ...]:
    out: list[BinaryCode] = []
    for n in range(1, length + 1):
        out.extend(enumerate_doubly_even(n))
    return tuple(out)


@lru_cache(maxsize=16)
def _by_length(length: int) -> dict[int, tuple[BinaryCode, ...]]:
    return {n: tuple(enumerate_doubly_even(n)) for n in range(1, length + 1)}


def _sym_or_generators(n: int, exhaustive_max: int = 4) -> list[Permutation]:
    """All of S_n for small n, otherwise identity + transposition + n-cycle."""
    if n <= exhaustive_max:
        return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    perms = [Permutation.identity(n), Permutation.from_cycles(n, [(1, 2)])]
    perms.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return perms


def _extended_hamming() -> BinaryCode:
    return make_code(
        8,
        [
            BitWord.from_string(s)
            for s in ("11110000", "00111100", "10101010", "11111111")
        ],
    )


# ---------------------------------------------------------------- enumeration


def suite_enumeration(length: int) -> SuiteResult:
    rec = _Recorder("enumeration")
    for n in range(1, length + 1):
        found = enumerate_doubly_even(n)
        rec.check(len(set(found)) == len(found), f"duplicates at length {n}")
        rec.check(
            found == sorted(found, key=lambda c: (c.dimension, tuple(str(g) for g in c.generators.rows))),
            f"ordering not canonical at length {n}",
        )
        rec.check(trivial_code(n) in found, f"trivial code missing at length {n}")
        for code in found:
            rec.check(
                is_doubly_even_exhaustive(code),
                f"{_fmt(code)} fails exhaustive weight check",
            )
    rec.check(len(enumerate_doubly_even(1)) == 1, "length 1 should have one code")
    if length >= 4:
        found4 = enumerate_doubly_even(4)
        rec.check(len(found4) == 2, f"length 4 has {len(found4)} codes, expected 2")
        rec.check(
            make_code(4, [BitWord.from_string("1111")]) in found4,
            "span{1111} missing at length 4",
        )
    return rec.result()


def suite_doubly_even_criterion(length: int) -> SuiteResult:
    rec = _Recorder("doubly-even-criterion")
    for n in range(1, min(length, 6) + 1):
        singles = [make_code(n, [BitWord(n, b)]) for b in range(1, 1 << n)]
        for code in singles:
            rec.check(
                is_doubly_even(code) == is_doubly_even_exhaustive(code),
                f"criterion mismatch on {_fmt(code)}",
            )
    for n in range(2, min(length, 4) + 1):
        for a in range(1, 1 << n):
            for b in range(a + 1, 1 << n):
                code = make_code(n, [BitWord(n, a), BitWord(n, b)])
                rec.check(
                    is_doubly_even(code) == is_doubly_even_exhaustive(code),
                    f"criterion mismatch on {_fmt(code)}",
                )
    for code in _corpus(length):
        rec.check(
            is_doubly_even(code) and is_doubly_even_exhaustive(code),
            f"enumerated code {_fmt(code)} not doubly even",
        )
        rec.check(
            all(w.weight() % 2 == 0 for w in codewords(code)),
            f"{_fmt(code)} has an odd-weight codeword",
        )
    return rec.result()


# --------------------------------------------------------------- operad laws


def suite_insert_associativity(length: int) -> SuiteResult:
    """Both partial-composition associativity families over all corpus triples."""
    rec = _Recorder("operad-insert-associativity")
    pool = _corpus(length)
    cache: dict[tuple[BinaryCode, int, BinaryCode], BinaryCode] = {}

    def ins(x: BinaryCode, i: int, y: BinaryCode) -> BinaryCode:
        key = (x, i, y)
        r = cache.get(key)
        if r is None:
            r = cache[key] = insert(x, i, y)
        return r

    for a in pool:
        for b in pool:
            ab_by_i = [ins(a, i, b) for i in range(1, a.length + 1)]
            for c in pool:
                for i in range(1, a.length + 1):
                    ab = ab_by_i[i - 1]
                    for j in range(1, b.length + 1):
                        lhs = insert(ab, i - 1 + j, c)
                        rhs = insert(a, i, ins(b, j, c))
                        rec.check(
                            lhs == rhs,
                            lambda a=a, b=b, c=c, i=i, j=j: (
                                f"nested {_fmt(a)} o_{i} {_fmt(b)} o_{j} {_fmt(c)}"
                            ),
                        )
                    for k in range(i + 1, a.length + 1):
                        lhs = insert(ab, k + b.length - 1, c)
                        rhs = insert(ins(a, k, c), i, b)
                        rec.check(
                            lhs == rhs,
                            lambda a=a, b=b, c=c, i=i, k=k: (
                                f"disjoint {_fmt(a)} o_{i} {_fmt(b)} / o_{k} {_fmt(c)}"
                            ),
                        )
    return rec.result()


def _compositions(n_parts: int, budget: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of n_parts parts in 1..max_part with sum <= budget."""
    if n_parts == 0:
        yield ()
        return
    for first in range(1, min(max_part, budget - (n_parts - 1)) + 1):
        for rest in _compositions(n_parts - 1, budget - first, max_part):
            yield (first,) + rest


def _pair_compositions(
    length: int, limit: int
) -> Iterator[tuple[BinaryCode, tuple[int, ...], tuple[BinaryCode, ...]]]:
    by_len = _by_length(length)
    for n in range(1, length + 1):
        for ks in _compositions(n, limit, length):
            pools = [by_len[k] for k in ks]
            for outer in by_len[n]:
                for inners in itertools.product(*pools):
                    yield outer, ks, inners


def suite_gamma_composition(length: int, gamma_limit: int) -> SuiteResult:
    """gamma == iterated insertion, doubly-even closure, and the raw-set
    span/linearity bookkeeping, over all compositions within gamma_limit."""
    rec = _Recorder("operad-gamma-composition")
    by_len = _by_length(length)

    for n in range(1, length + 1):
        for outer in by_len[n]:
            inners: list[BinaryCode] = [trivial_code(1)] * n

            def descend(slot: int, partial: BinaryCode, budget: int) -> None:
                if slot == 0:
                    composed = gamma(outer, inners)
                    rec.check(
                        composed == partial,
                        lambda: f"gamma != iterated insert for {_fmt(outer)}",
                    )
                    rec.check(
                        is_doubly_even_exhaustive(composed),
                        lambda: f"gamma output {_fmt(composed)} not doubly even",
                    )
                    raw = gamma_raw_set(outer, inners, cap=1 << 16)
                    span_words = set(codewords(composed))
                    rec.check(
                        raw <= span_words,
                        lambda: f"raw set escapes its span for {_fmt(outer)}",
                    )
                    rec.check(
                        (raw == span_words) == is_xor_closed(raw),
                        lambda: f"linearity detector out of step for {_fmt(outer)}",
                    )
                    return
                for k in range(1, min(length, budget - (slot - 1)) + 1):
                    for inner in by_len[k]:
                        inners[slot - 1] = inner
                        descend(slot - 1, insert(partial, slot, inner), budget - k)

            descend(n, outer, gamma_limit)
    return rec.result()


def suite_equivariance(length: int, equiv_limit: int) -> SuiteResult:
    rec = _Recorder("operad-equivariance")
    for outer, ks, inners in _pair_compositions(length, equiv_limit):
        n = outer.length
        base = gamma(outer, inners)
        for s in _sym_or_generators(n):
            s_inv = s.inverse()
            lhs = gamma(
                permute_code(outer, s),
                [inners[s_inv(j) - 1] for j in range(1, n + 1)],
            )
            rhs = permute_code(base, block_permutation(s, ks))
            rec.check(
                lhs == rhs,
                lambda outer=outer, s=s: (
                    f"outer equivariance {_fmt(outer)} sigma={s.images}"
                ),
            )
        identities = [Permutation.identity(k) for k in ks]
        for slot in range(n):
            if ks[slot] < 2:
                continue
            for t in _sym_or_generators(ks[slot]):
                perms = list(identities)
                perms[slot] = t
                permuted = list(inners)
                permuted[slot] = permute_code(inners[slot], t)
                lhs = gamma(outer, permuted)
                rhs = permute_code(base, within_block_permutation(perms, ks))
                rec.check(
                    lhs == rhs,
                    lambda outer=outer, slot=slot, t=t: (
                        f"inner equivariance {_fmt(outer)} slot={slot + 1} tau={t.images}"
                    ),
                )
    return rec.result()


def suite_non_unitality(length: int) -> SuiteResult:
    rec = _Recorder("operad-non-unitality")
    one = trivial_code(1)
    for code in _corpus(length):
        if code.is_trivial():
            continue
        rec.check(
            gamma(code, trivial_inners(code.length)) != code,
            f"gamma({_fmt(code)}; 1,...,1) returned the code itself",
        )
        rec.check(
            gamma(one, [code]) != code,
            f"gamma(1; {_fmt(code)}) returned the code itself",
        )
    return rec.result()


def counterexample_composition() -> tuple[BinaryCode, list[BinaryCode]]:
    """The outer/inner pair whose literal substitution set is not XOR-closed."""
    outer = make_code(
        8, [BitWord.from_string("11110000"), BitWord.from_string("00111100")]
    )
    inner = make_code(4, [BitWord.from_string("1111")])
    return outer, [inner] * 8


def suite_raw_gap(length: int) -> SuiteResult:
    rec = _Recorder("operad-raw-set-gap")
    outer, inners = counterexample_composition()
    raw = gamma_raw_set(outer, inners, cap=1 << 20)
    rec.check(not is_xor_closed(raw), "counterexample raw set is XOR-closed")
    span = gamma(outer, inners)
    rec.check(is_doubly_even_exhaustive(span), "counterexample span not doubly even")
    rec.check(
        span == make_code(span.length, list(raw)),
        "gamma differs from the raw-set span",
    )
    from .operad import iterated_insert

    rec.check(
        span == iterated_insert(outer, inners),
        "counterexample span breaks the iterated-insert identity",
    )
    for outer2, _, inners2 in _pair_compositions(length, min(length + 2, 8)):
        raw2 = gamma_raw_set(outer2, inners2, cap=1 << 16)
        span_words = set(codewords(gamma(outer2, inners2)))
        rec.check(
            (raw2 == span_words) == is_xor_closed(raw2),
            f"linearity detector out of step for {_fmt(outer2)}",
        )
    return rec.result()


# ------------------------------------------------------------------ adinkras


def suite_chromotopology(length: int) -> SuiteResult:
    rec = _Recorder("chromotopology-axioms")
    for code in _corpus(length):
        n = code.length
        ch = chromotopology_from_code(code)
        report = verify_chromotopology(ch)
        rec.check(report.ok, f"{_fmt(code)} axioms: {report.violations[:2]}")
        n_v = 1 << (n - code.dimension)
        rec.check(
            len(ch.vertices) == n_v,
            f"{_fmt(code)} has {len(ch.vertices)} vertices, expected {n_v}",
        )
        rec.check(
            len(ch.edges) == n * n_v // 2,
            f"{_fmt(code)} has {len(ch.edges)} edges, expected {n * n_v // 2}",
        )
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                cycles = two_color_cycles(ch, i, j)
                rec.check(
                    len(cycles) == n_v // 4,
                    f"{_fmt(code)} colors ({i},{j}): {len(cycles)} cycles",
                )
        rec.check(
            all(w.weight() >= 4 for w in codewords(code) if w.bits),
            f"{_fmt(code)} has a nonzero codeword of weight < 4",
        )
        for v in ch.vertices:
            rec.check(
                all((v ^ c).weight() % 2 == v.weight() % 2 for c in codewords(code)),
                f"{_fmt(code)} bipartition not constant on coset of {v}",
            )
    return rec.result()


def suite_dashing(length: int, exhaustive_edge_limit: int = 16) -> SuiteResult:
    rec = _Recorder("odd-dashing")
    for code in _corpus(length):
        ch = chromotopology_from_code(code)
        dashing, count = solve_dashing(ch)
        rec.check(verify_dashing(ch, dashing), f"{_fmt(code)} dashing fails a 4-cycle")
        rec.check(count >= 1 and count & (count - 1) == 0, f"{_fmt(code)} count {count}")
        if len(ch.edges) <= exhaustive_edge_limit:
            a, _ = _dashing_system(ch)
            masks = [row.bits for row in a.rows]
            brute = sum(
                1
                for d in range(1 << len(ch.edges))
                if all((d & m).bit_count() & 1 for m in masks)
            )
            rec.check(
                brute == count,
                f"{_fmt(code)}: solver count {count} != brute force {brute}",
            )
    if length >= 2:
        _, square_count = solve_dashing(chromotopology_from_code(trivial_code(2)))
        rec.check(square_count == 8, f"square has {square_count} odd-dashings, expected 8")
    return rec.result()


# ---------------------------------------------------------------- code loops


def _loop_checks(rec: _Recorder, code: BinaryCode) -> None:
    label = _fmt(code)
    lp = build_loop(code)
    rec.check(lp.order == 2 << code.dimension, f"{label} loop order {lp.order}")
    elements = lp.elements()
    table = cayley_table(lp)
    size = len(elements)
    index = {e: k for k, e in enumerate(elements)}
    for r, row in enumerate(table):
        rec.check(
            sorted(index[e] for e in row) == list(range(size)),
            f"{label} row {r} not a permutation",
        )
    for c in range(size):
        rec.check(
            sorted(index[table[r][c]] for r in range(size)) == list(range(size)),
            f"{label} column {c} not a permutation",
        )
    ident = lp.identity()
    rec.check(
        all(
            loop_product(lp, ident, x) == x and loop_product(lp, x, ident) == x
            for x in elements
        ),
        f"{label} identity fails",
    )
    rec.check(
        all(
            any(
                loop_product(lp, x, y) == ident and loop_product(lp, y, x) == ident
                for y in elements
            )
            for x in elements
        ),
        f"{label} has an element without a two-sided inverse",
    )
    rec.check(is_moufang(lp), f"{label} fails the Moufang identity")
    words = codewords(code)
    psi_zero = all(
        psi(u, v, w) == 0 for u in words for v in words for w in words
    )
    rec.check(
        is_associative(lp) == psi_zero,
        f"{label} associativity disagrees with psi",
    )
    report = verify_extension(lp)
    rec.check(report.ok, f"{label} extension: {report}")
    for u in words:
        x = loop_product(lp, LoopElement(0, u), LoopElement(0, u))
        rec.check(
            x == LoopElement(alpha(u), BitWord(code.length)),
            f"{label} square of {u} misses alpha",
        )
    for u in words:
        for v in words:
            xy = loop_product(lp, LoopElement(0, u), LoopElement(0, v))
            yx = loop_product(lp, LoopElement(0, v), LoopElement(0, u))
            rec.check(
                xy.word == yx.word and (xy.s ^ yx.s) == phi(u, v),
                lambda u=u, v=v: f"{label} commutator of {u},{v} misses phi",
            )
            for w in words:
                lhs = loop_product(lp, xy, LoopElement(0, w))
                rhs = loop_product(
                    lp, LoopElement(0, u), loop_product(lp, LoopElement(0, v), LoopElement(0, w))
                )
                rec.check(
                    lhs.word == rhs.word and (lhs.s ^ rhs.s) == psi(u, v, w),
                    lambda u=u, v=v, w=w: f"{label} associator of {u},{v},{w} misses psi",
                )
    solutions = cocycle_solutions(code)[:2]
    if len(solutions) == 2:
        first, second = solutions
        rec.check(
            first.table != second.table,
            f"{label} sampled theta solutions coincide",
        )
        for u in words:
            for v in words:
                rec.check(
                    (first.theta(u, v) ^ first.theta(v, u))
                    == (second.theta(u, v) ^ second.theta(v, u)),
                    f"{label} theta solutions disagree on commutation data",
                )
            rec.check(
                first.theta(u, u) == second.theta(u, u),
                f"{label} theta solutions disagree on squares",
            )


def suite_code_loops(length: int, element_cap: int = 16) -> SuiteResult:
    rec = _Recorder("code-loops")
    targets = [c for c in _corpus(length) if (1 << c.dimension) <= element_cap]
    if element_cap >= 16:
        targets.append(_extended_hamming())
    for code in targets:
        _loop_checks(rec, code)
    e8 = _extended_hamming()
    if element_cap >= 16:
        lp = build_loop(e8)
        rec.check(lp.order == 32, f"extended Hamming loop order {lp.order}")
        rec.check(is_moufang(lp), "extended Hamming loop not Moufang")
        rec.check(not is_associative(lp), "extended Hamming loop is associative")
    return rec.result()


# ------------------------------------------------------------------- dessins


def _connected(ch) -> bool:
    if not ch.vertices:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for a, b, _ in ch.edges:
            if a == v and b not in seen:
                seen.add(b)
                frontier.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                frontier.append(a)
    return len(seen) == len(ch.vertices)


def suite_dessins(length: int) -> SuiteResult:
    rec = _Recorder("dessins")
    for code in _corpus(length):
        n = code.length
        ch = chromotopology_from_code(code)
        d = dessin_from_chromotopology(ch)
        m = len(ch.vertices) // 2
        rec.check(
            verify_cycle_structure(d, n, m),
            f"{_fmt(code)} dessin cycle structure",
        )
        rec.check(d.n == n * m, f"{_fmt(code)} edge count {d.n} != {n * m}")
        rec.check(d.n == len(ch.edges), f"{_fmt(code)} dessin size mismatch")
        product = d.sigma0.then(d.sigma1).then(sigma_infinity(d))
        rec.check(
            product == Permutation.identity(d.n),
            f"{_fmt(code)} sigma product not identity",
        )
        rec.check(
            is_transitive(d) == _connected(ch),
            f"{_fmt(code)} transitivity disagrees with connectivity",
        )
        g = genus(d)
        rec.check(g >= 0, f"{_fmt(code)} negative genus {g}")
    return rec.result()


# ---------------------------------------------------------------- symmetries


def suite_symmetries(length: int) -> SuiteResult:
    rec = _Recorder("symmetries")
    for code in _corpus(length):
        n = code.length
        a = build_adinkra(code)
        identity = Permutation.identity(len(a.chromotopology.vertices))
        translations = {}
        for bits in range(1 << n):
            translations[bits] = translation_action(a, BitWord(n, bits))
        for u_bits, tu in translations.items():
            for w_bits, tw in translations.items():
                rec.check(
                    tu.then(tw) == translations[u_bits ^ w_bits],
                    lambda code=code, u=u_bits, w=w_bits: (
                        f"{_fmt(code)} translations fail at {u}^{w}"
                    ),
                )
        for w in codewords(code):
            rec.check(
                translations[w.bits] == identity,
                f"{_fmt(code)} codeword {w} does not act trivially",
            )
        autos = code_automorphisms(code)
        rec.check(
            Permutation.identity(n) in autos,
            f"{_fmt(code)} automorphisms miss the identity",
        )
        auto_set = set(autos)
        for s in autos:
            rec.check(s.inverse() in auto_set, f"{_fmt(code)} not inverse-closed")
            for t in autos:
                rec.check(
                    s.then(t) in auto_set,
                    lambda code=code: f"{_fmt(code)} not closed under composition",
                )
        for s in autos:
            rec.check(
                color_permutation_action(a, s) is not None,
                f"{_fmt(code)} automorphism {s.images} gives no color action",
            )
    if length >= 4:
        h = make_code(4, [BitWord.from_string("1111")])
        a = build_adinkra(h)
        present = sum(
            color_permutation_action(a, Permutation(p)) is not None
            for p in itertools.permutations((1, 2, 3, 4))
        )
        rec.check(present == 24, f"span(1111): {present}/24 color permutations act")
    return rec.result()


# --------------------------------------------------------------- round trips


def suite_round_trip(length: int) -> SuiteResult:
    rec = _Recorder("json-round-trip")
    import json

    for code in _corpus(length):
        record = json.loads(json.dumps(code_to_record(code)))
        rec.check(code_from_record(record) == code, f"{_fmt(code)} code record")
        a = build_adinkra(code)
        record = json.loads(json.dumps(adinkra_to_record(a)))
        rec.check(adinkra_from_record(record) == a, f"{_fmt(code)} adinkra record")
        d = dessin_from_chromotopology(a.chromotopology)
        record = json.loads(json.dumps(dessin_to_record(d)))
        rec.check(dessin_from_record(record) == d, f"{_fmt(code)} dessin record")
    return rec.result()


# ------------------------------------------------------------------- run all


def run_all(
    length: int = 6,
    *,
    gamma_limit: int = 12,
    equiv_limit: int = 10,
    element_cap: int = 16,
) -> list[SuiteResult]:
    return [
        suite_enumeration(length),
        suite_doubly_even_criterion(length),
        suite_insert_associativity(length),
        suite_gamma_composition(length, gamma_limit),
        suite_equivariance(length, equiv_limit),
        suite_non_unitality(length),
        suite_raw_gap(length),
        suite_chromotopology(length),
        suite_dashing(length),
        suite_code_loops(length, element_cap),
        suite_dessins(length),
        suite_symmetries(length),
        suite_round_trip(length),
    ]
