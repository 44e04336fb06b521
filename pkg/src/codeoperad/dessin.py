"""Dessins d'enfants of chromotopologies: permutation pairs on edges.

The edge coloring orders the edges cyclically at every vertex (color 1,
2, ..., N and back to 1), which is exactly a ribbon structure.  sigma0
rotates edges around white vertices, sigma1 around black ones, so each
permutation splits into one N-cycle per vertex of its class.

Permutations compose left to right: (sigma0 sigma1)(x) = sigma1(sigma0(x)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .adinkra import BLACK, WHITE, Chromotopology, _incidence, verify_chromotopology
from .codes import Permutation, mulclose
from .errors import InvalidChromotopology, NonIntegerGenus, NotTransitive

MONODROMY_CAP = 10**6


@dataclass(frozen=True)
class Dessin:
    n: int
    sigma0: Permutation
    sigma1: Permutation

    def __post_init__(self):
        if self.sigma0.degree != self.n or self.sigma1.degree != self.n:
            raise ValueError(f"permutations must act on 1..{self.n}")


def dessin_from_chromotopology(ch: Chromotopology) -> Dessin:
    """Label edges 1..n in canonical order and read off both vertex rotations."""
    report = verify_chromotopology(ch)
    if not report.ok:
        raise InvalidChromotopology("; ".join(report.violations))
    incidence = _incidence(ch)
    n = len(ch.edges)
    images0 = [0] * n
    images1 = [0] * n
    for k, (v, w, color) in enumerate(ch.edges):
        nxt = color % ch.n_colors + 1
        for vertex in (v, w):
            images = images0 if ch.bipartition[vertex] == WHITE else images1
            images[k] = incidence[(vertex, nxt)] + 1
    return Dessin(n, Permutation(tuple(images0)), Permutation(tuple(images1)))


def verify_cycle_structure(d: Dessin, n_colors: int, m: int) -> bool:
    """Both permutations decompose into exactly m cycles of length n_colors."""
    for sigma in (d.sigma0, d.sigma1):
        cycles = sigma.cycles()
        if len(cycles) != m or any(len(c) != n_colors for c in cycles):
            return False
    return True


def sigma_infinity(d: Dessin) -> Permutation:
    """The permutation with sigma0 sigma1 sigma_infinity = identity."""
    return d.sigma0.then(d.sigma1).inverse()


def is_transitive(d: Dessin) -> bool:
    """Single orbit of <sigma0, sigma1> on the edges, by orbit sweep."""
    if d.n < 1:
        raise ValueError("dessin needs at least one edge")
    seen = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for sigma in (d.sigma0, d.sigma1):
            for y in (sigma(x), sigma.inverse()(x)):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == d.n


def genus(d: Dessin) -> int:
    """Euler genus: 2 - 2g = cycles(s0) + cycles(s1) + cycles(s_inf) - n."""
    if not is_transitive(d):
        raise NotTransitive("genus requires a transitive dessin")
    c = (
        len(d.sigma0.cycles())
        + len(d.sigma1.cycles())
        + len(sigma_infinity(d).cycles())
    )
    rhs = 2 - (c - d.n)
    if rhs % 2:
        raise NonIntegerGenus(f"Euler relation gives 2g = {rhs}")
    g = rhs // 2
    if g < 0:
        raise NonIntegerGenus(f"negative genus {g}")
    return g


def monodromy_order(d: Dessin, cap: int = MONODROMY_CAP) -> int | None:
    """|<sigma0, sigma1>| by closure over products; None once cap is exceeded."""
    closure = mulclose([d.sigma0, d.sigma1], cap)
    return None if closure is None else len(closure)


def automorphism_order(d: Dessin) -> int:
    """Order of the centralizer of <sigma0, sigma1>, for transitive dessins.

    An automorphism of a transitive dessin is determined by the image of
    edge 1: propagate f(sigma(x)) = sigma(f(x)) for both generators and
    count the images that extend consistently to a bijection.
    """
    if not is_transitive(d):
        raise NotTransitive("automorphisms computed for transitive dessins only")
    count = 0
    for target in range(1, d.n + 1):
        f = {1: target}
        frontier = [1]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for sigma in (d.sigma0, d.sigma1):
                y, fy = sigma(x), sigma(f[x])
                if y in f:
                    if f[y] != fy:
                        ok = False
                        break
                else:
                    f[y] = fy
                    frontier.append(y)
        if ok and len(set(f.values())) == d.n:
            count += 1
    return count


def dessin_to_record(d: Dessin) -> dict:
    """JSON-ready record with 1-based image lists."""
    return {
        "n": d.n,
        "sigma0": list(d.sigma0.images),
        "sigma1": list(d.sigma1.images),
    }


def dessin_from_record(record: dict) -> Dessin:
    return Dessin(
        record["n"],
        Permutation(tuple(record["sigma0"])),
        Permutation(tuple(record["sigma1"])),
    )
