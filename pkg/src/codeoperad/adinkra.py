"""Adinkras as hypercube quotients: chromotopology, ranking, odd-dashing, symmetries.

The quotient graph of a doubly-even code L in F2^N has the cosets of L as
vertices and a color-i edge between v+L and v+e_i+L.  Doubly-evenness
guarantees there are no loops or parallel edges (no codewords of weight 1
or 2) and that weight parity is constant on cosets, which makes the
white/black bipartition well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import (
    BinaryCode,
    Permutation,
    code_automorphisms,
    code_from_record,
    code_to_record,
    codewords,
    is_doubly_even,
    mulclose,
    permute_code,
    permute_word,
)
from .errors import (
    DegreeMismatch,
    InvalidChromotopology,
    LengthMismatch,
    NoDashing,
    NotDoublyEven,
    SameColor,
)
from .gf2 import BitWord, GF2Matrix, solve_affine

WHITE = "white"
BLACK = "black"


@dataclass(frozen=True)
class Chromotopology:
    """An edge-colored bipartite graph; validity is checked by verify_chromotopology."""

    n_colors: int
    vertices: tuple[BitWord, ...]
    edges: tuple[tuple[int, int, int], ...]  # (v, w, color) with v < w
    bipartition: tuple[str, ...]


@dataclass(frozen=True)
class Adinkra:
    chromotopology: Chromotopology
    ranking: tuple[int, ...]
    dashing: tuple[int, ...]
    source_code: BinaryCode


@dataclass(frozen=True)
class ChromotopologyReport:
    regular: bool
    bipartite: bool
    color_matching: bool
    four_cycles: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.regular and self.bipartite and self.color_matching and self.four_cycles


def chromotopology_from_code(code: BinaryCode) -> Chromotopology:
    """The quotient graph F2^N / L with minimal-lex coset representatives."""
    if not is_doubly_even(code):
        raise NotDoublyEven(f"code of length {code.length} is not doubly even")
    n = code.length
    words = codewords(code)
    rep_of: dict[int, BitWord] = {}
    for bits in range(1 << n):
        if bits in rep_of:
            continue
        coset = [BitWord(n, bits ^ c.bits) for c in words]
        rep = min(coset)
        for w in coset:
            rep_of[w.bits] = rep
    vertices = tuple(sorted(set(rep_of.values())))
    index = {v.bits: i for i, v in enumerate(vertices)}
    edges = set()
    for i, v in enumerate(vertices):
        for color in range(1, n + 1):
            j = index[rep_of[v.bits ^ (1 << (color - 1))].bits]
            edges.add((min(i, j), max(i, j), color))
    bipartition = tuple(WHITE if v.weight() % 2 == 0 else BLACK for v in vertices)
    # Canonical edge order: (min vertex index, color), a unique key per edge.
    ordered = tuple(sorted(edges, key=lambda e: (e[0], e[2])))
    return Chromotopology(n, vertices, ordered, bipartition)


@lru_cache(maxsize=512)
def _incidence(ch: Chromotopology) -> dict[tuple[int, int], int]:
    """(vertex, color) -> edge index; duplicates win arbitrarily on invalid graphs."""
    out = {}
    for k, (v, w, c) in enumerate(ch.edges):
        out[(v, c)] = k
        out[(w, c)] = k
    return out


def _alternating_cycles(
    ch: Chromotopology, i: int, j: int
) -> list[tuple[int, ...]]:
    """Components of the {i,j}-colored subgraph as edge-index cycles, walk order."""
    incidence = _incidence(ch)
    seen: set[int] = set()
    cycles = []
    for start, (v, w, c) in enumerate(ch.edges):
        if c not in (i, j) or start in seen:
            continue
        cycle = [start]
        seen.add(start)
        vertex, color = w, c
        while True:
            other = i + j - color
            e = incidence.get((vertex, other))
            if e is None:
                raise InvalidChromotopology(
                    f"vertex {vertex} has no color-{other} edge"
                )
            if e == start:
                break
            if e in seen:
                raise InvalidChromotopology(
                    f"edge {e} revisited walking colors ({i},{j})"
                )
            cycle.append(e)
            seen.add(e)
            a, b, color = ch.edges[e]
            vertex = b if a == vertex else a
        cycles.append(tuple(cycle))
    return cycles


def two_color_cycles(ch: Chromotopology, i: int, j: int) -> list[tuple[int, ...]]:
    """The partition of the {i,j}-colored edges into cycles (4-cycles on valid input)."""
    if i == j:
        raise SameColor(f"colors must differ, got {i} twice")
    for c in (i, j):
        if not 1 <= c <= ch.n_colors:
            raise SameColor(f"color {c} outside 1..{ch.n_colors}")
    return _alternating_cycles(ch, min(i, j), max(i, j))


def verify_chromotopology(ch: Chromotopology) -> ChromotopologyReport:
    """Check the chromotopology axioms; violations are data, not errors."""
    violations = []
    n_v = len(ch.vertices)
    pair_seen = set()
    for v, w, c in ch.edges:
        if v == w:
            violations.append(f"loop at vertex {v}")
        if (v, w) in pair_seen:
            violations.append(f"parallel edges between {v} and {w}")
        pair_seen.add((v, w))
        if not (0 <= v < n_v and 0 <= w < n_v):
            violations.append(f"edge ({v},{w},{c}) has an unknown endpoint")
    counts: dict[tuple[int, int], int] = {}
    for v, w, c in ch.edges:
        counts[(v, c)] = counts.get((v, c), 0) + 1
        counts[(w, c)] = counts.get((w, c), 0) + 1
    color_matching = True
    for v in range(n_v):
        for c in range(1, ch.n_colors + 1):
            k = counts.get((v, c), 0)
            if k != 1:
                color_matching = False
                violations.append(f"vertex {v} meets {k} edges of color {c}")
    degree = [0] * n_v
    for v, w, _ in ch.edges:
        degree[v] += 1
        degree[w] += 1
    regular = all(d == ch.n_colors for d in degree)
    if not regular:
        bad = [v for v, d in enumerate(degree) if d != ch.n_colors]
        violations.append(f"vertices {bad} are not {ch.n_colors}-regular")
    bipartite = True
    for v, w, c in ch.edges:
        if ch.bipartition[v] == ch.bipartition[w]:
            bipartite = False
            violations.append(f"edge ({v},{w},{c}) joins two {ch.bipartition[v]} vertices")
    four_cycles = True
    if color_matching:
        for i in range(1, ch.n_colors + 1):
            for j in range(i + 1, ch.n_colors + 1):
                try:
                    cycles = _alternating_cycles(ch, i, j)
                except InvalidChromotopology as exc:
                    four_cycles = False
                    violations.append(str(exc))
                    continue
                for cycle in cycles:
                    if len(cycle) != 4:
                        four_cycles = False
                        violations.append(
                            f"colors ({i},{j}) contain a {len(cycle)}-cycle"
                        )
    else:
        four_cycles = False
    return ChromotopologyReport(
        regular, bipartite, color_matching, four_cycles, tuple(violations)
    )


def valise_ranking(ch: Chromotopology) -> tuple[int, ...]:
    """Height 0 on white vertices, 1 on black."""
    report = verify_chromotopology(ch)
    if not report.ok:
        raise InvalidChromotopology("; ".join(report.violations))
    return tuple(0 if b == WHITE else 1 for b in ch.bipartition)


def verify_ranking(ch: Chromotopology, ranking: tuple[int, ...]) -> list[str]:
    """Parity and rank-adjacency violations of an arbitrary ranking."""
    violations = []
    for v, (b, h) in enumerate(zip(ch.bipartition, ranking)):
        if b == WHITE and h % 2 != 0:
            violations.append(f"white vertex {v} has odd rank {h}")
        if b == BLACK and h % 2 != 1:
            violations.append(f"black vertex {v} has even rank {h}")
    for v, w, c in ch.edges:
        if abs(ranking[v] - ranking[w]) != 1:
            violations.append(f"edge ({v},{w},{c}) spans ranks {ranking[v]},{ranking[w]}")
    return violations


def _dashing_system(ch: Chromotopology) -> tuple[GF2Matrix, BitWord]:
    rows = []
    for i in range(1, ch.n_colors + 1):
        for j in range(i + 1, ch.n_colors + 1):
            for cycle in _alternating_cycles(ch, i, j):
                bits = 0
                for e in cycle:
                    bits |= 1 << e
                rows.append(BitWord(len(ch.edges), bits))
    a = GF2Matrix(len(ch.edges), tuple(rows))
    b = BitWord(len(rows), (1 << len(rows)) - 1)
    return a, b


def solve_dashing(ch: Chromotopology) -> tuple[tuple[int, ...], int]:
    """A canonical odd-dashing and the number of odd-dashings (a power of two).

    One F2 unknown per edge and one parity-1 equation per 2-colored
    4-cycle; the canonical solution sets all free variables to 0.
    """
    report = verify_chromotopology(ch)
    if not report.ok:
        raise InvalidChromotopology("; ".join(report.violations))
    a, b = _dashing_system(ch)
    solution = solve_affine(a, b)
    if solution is None:
        raise NoDashing("odd-dashing system is inconsistent")
    particular, basis = solution
    dashing = tuple(particular.get(k + 1) for k in range(len(ch.edges)))
    return dashing, 1 << len(basis)


def verify_dashing(ch: Chromotopology, dashing: tuple[int, ...]) -> bool:
    """Every 2-colored 4-cycle carries an odd number of dashed edges."""
    for i in range(1, ch.n_colors + 1):
        for j in range(i + 1, ch.n_colors + 1):
            for cycle in _alternating_cycles(ch, i, j):
                if sum(dashing[e] for e in cycle) % 2 == 0:
                    return False
    return True


def build_adinkra(code: BinaryCode) -> Adinkra:
    """Quotient chromotopology with the valise ranking and canonical dashing."""
    ch = chromotopology_from_code(code)
    ranking = valise_ranking(ch)
    dashing, _ = solve_dashing(ch)
    return Adinkra(ch, ranking, dashing, code)


@dataclass(frozen=True)
class SusyRelation:
    """One edge read as the pair of supersymmetry relations it encodes."""

    color: int
    boson: int
    fermion: int
    c: int
    lam: int

    @property
    def boson_equation(self) -> str:
        sign = "" if self.c == 1 else "-"
        dt = "d_t " if self.lam else ""
        return f"Q{self.color} phi{self.boson} = {sign}{dt}psi{self.fermion}"

    @property
    def fermion_equation(self) -> str:
        coeff = "i" if self.c == 1 else "-i"
        dt = "d_t " if self.lam == 0 else ""
        return f"Q{self.color} psi{self.fermion} = {coeff} {dt}phi{self.boson}"

    def to_record(self) -> dict:
        return {
            "color": self.color,
            "boson": self.boson,
            "fermion": self.fermion,
            "c": self.c,
            "lambda": self.lam,
            "boson_equation": self.boson_equation,
            "fermion_equation": self.fermion_equation,
        }


def susy_relations(a: Adinkra) -> list[SusyRelation]:
    """One record per edge; c = -1 on dashed edges, lambda from the rank order."""
    ch = a.chromotopology
    out = []
    for k, (v, w, color) in enumerate(ch.edges):
        if ch.bipartition[v] == WHITE:
            boson, fermion = v, w
        else:
            boson, fermion = w, v
        c = -1 if a.dashing[k] else 1
        lam = 0 if a.ranking[boson] < a.ranking[fermion] else 1
        out.append(SusyRelation(color, boson, fermion, c, lam))
    return out


def translation_action(a: Adinkra, u: BitWord) -> Permutation:
    """The coset map v+L -> v+u+L as a permutation of vertex positions (1-based)."""
    ch = a.chromotopology
    if u.length != ch.n_colors:
        raise LengthMismatch(f"translation length {u.length} != {ch.n_colors}")
    index = {v.bits: i for i, v in enumerate(ch.vertices)}
    words = codewords(a.source_code)

    def rep_index(bits: int) -> int:
        return index[min(BitWord(u.length, bits ^ c.bits) for c in words).bits]

    images = tuple(rep_index(v.bits ^ u.bits) + 1 for v in ch.vertices)
    perm = Permutation(images)
    edge_set = set(ch.edges)
    for v, w, color in ch.edges:
        tv, tw = perm(v + 1) - 1, perm(w + 1) - 1
        assert (min(tv, tw), max(tv, tw), color) in edge_set, "translation broke an edge"
    return perm


@dataclass(frozen=True)
class ColorAction:
    """A chromotopology automorphism induced by a code-preserving color permutation."""

    color_perm: Permutation
    vertex_perm: Permutation
    edge_perm: Permutation


def color_permutation_action(a: Adinkra, s: Permutation) -> ColorAction | None:
    """Permute coordinates and relabel colors by s; present iff s preserves the code."""
    ch = a.chromotopology
    if s.degree != ch.n_colors:
        raise DegreeMismatch(f"degree {s.degree} != {ch.n_colors} colors")
    code = a.source_code
    if permute_code(code, s) != code:
        return None
    index = {v.bits: i for i, v in enumerate(ch.vertices)}
    words = codewords(code)

    def rep_index(w: BitWord) -> int:
        return index[min(w ^ c for c in words).bits]

    vertex_images = tuple(
        rep_index(permute_word(v, s)) + 1 for v in ch.vertices
    )
    vertex_perm = Permutation(vertex_images)
    edge_index = {e: k for k, e in enumerate(ch.edges)}
    edge_images = []
    for v, w, color in ch.edges:
        tv, tw = vertex_perm(v + 1) - 1, vertex_perm(w + 1) - 1
        target = (min(tv, tw), max(tv, tw), s(color))
        if target not in edge_index:
            return None
        edge_images.append(edge_index[target] + 1)
    return ColorAction(s, vertex_perm, Permutation(tuple(edge_images)))


def dihedral_color_symmetries(a: Adinkra) -> list[tuple[Permutation, ColorAction]]:
    """Which of the 2N rotations/reflections of the color cycle preserve the code."""
    n = a.chromotopology.n_colors
    out = []
    seen = set()
    for k in range(n):
        rot = Permutation(tuple((i - 1 + k) % n + 1 for i in range(1, n + 1)))
        refl = Permutation(tuple((k - (i - 1)) % n + 1 for i in range(1, n + 1)))
        for s in (rot, refl):
            if s.images in seen:
                continue
            seen.add(s.images)
            action = color_permutation_action(a, s)
            if action is not None:
                out.append((s, action))
    return out


@dataclass(frozen=True)
class SymmetryReport:
    """Orders of the symmetry groups generated by the quotient construction."""

    translation_order: int
    color_order: int
    generated_order: int | None
    loop_order: int

    @property
    def contains_loop_order(self) -> bool:
        return self.generated_order is not None and self.generated_order >= self.loop_order


def hidden_symmetries(a: Adinkra, cap: int = 1 << 20) -> SymmetryReport:
    """Group generated by all translations and code-preserving color permutations,
    compared against the order 2*|L| of the code loop."""
    ch = a.chromotopology
    n = ch.n_colors
    translations = {translation_action(a, BitWord(n, u)) for u in range(1 << n)}
    colors = {
        color_permutation_action(a, s).vertex_perm
        for s in code_automorphisms(a.source_code)
    }
    generated = mulclose(translations | colors, cap)
    return SymmetryReport(
        translation_order=len(translations),
        color_order=len(colors),
        generated_order=None if generated is None else len(generated),
        loop_order=2 << a.source_code.dimension,
    )


def export_dot(a: Adinkra) -> str:
    """Deterministic DOT text: white vertices as circles, black as points,
    dashed style on edges with d = 1."""
    ch = a.chromotopology
    lines = ["graph adinkra {"]
    for v, b in zip(ch.vertices, ch.bipartition):
        shape = "circle" if b == WHITE else "point"
        lines.append(f'  "{v}" [shape={shape}];')
    for (v, w, color), d in zip(ch.edges, a.dashing):
        attrs = f'label="{color}"'
        if d:
            attrs += ", style=dashed"
        lines.append(f'  "{ch.vertices[v]}" -- "{ch.vertices[w]}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def adinkra_to_record(a: Adinkra) -> dict:
    ch = a.chromotopology
    return {
        "code": code_to_record(a.source_code),
        "vertices": [str(v) for v in ch.vertices],
        "bipartition": list(ch.bipartition),
        "edges": [
            {"v": v, "w": w, "color": c, "dashed": bool(d)}
            for (v, w, c), d in zip(ch.edges, a.dashing)
        ],
        "ranking": list(a.ranking),
    }


def adinkra_from_record(record: dict) -> Adinkra:
    code = code_from_record(record["code"])
    vertices = tuple(BitWord.from_string(s) for s in record["vertices"])
    edges = tuple((e["v"], e["w"], e["color"]) for e in record["edges"])
    dashing = tuple(1 if e["dashed"] else 0 for e in record["edges"])
    ch = Chromotopology(code.length, vertices, edges, tuple(record["bipartition"]))
    return Adinkra(ch, tuple(record["ranking"]), dashing, code)
