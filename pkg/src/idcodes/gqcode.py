"""Explicit identifying-code constructions on the four GQ families.

Each construction assembles the line-based point set from the geometry,
certifies it with the verifier, then prunes it to an inclusion-minimal code.
Selections are deterministic: candidates are scanned in lexicographic order
and advanced past any candidate that fails a geometric predicate.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import families
from .bounds import t2star_family_bound
from .codes import Property, is_identifying, prune
from .errors import BadParams, ConstructionFailed
from .graph import Graph, VertexSet, bits
from .pg import ProjPoint, span_rank


@dataclass(frozen=True)
class Construction:
    """A certified identifying code built on a generated GQ graph."""
    family: str
    q: int
    graph: Graph
    pre_prune: VertexSet
    code: VertexSet
    table_size: int      # upper-bound value the construction targets
    family_bound: int    # printed family lower bound (the table's lower column)
    best_lower: int      # strongest applicable lower bound computed live

    @property
    def optimal(self) -> bool:
        return self.code.size == self.best_lower

    @property
    def meets_table(self) -> bool:
        return self.code.size <= self.table_size


def _lines_of(g: Graph) -> list[frozenset[int]]:
    return families.gq_lines(g)


def _line_points(g: Graph, line) -> list[ProjPoint]:
    return [g.labels[v] for v in sorted(line)]


def _vset(g: Graph, verts) -> VertexSet:
    return VertexSet.of(g.n, verts)


def _certify(g: Graph, members: set[int], family: str, q: int,
             expected_pre: int, table_size: int, family_bound: int) -> Construction:
    from .bounds import report

    pre = _vset(g, members)
    if pre.size != expected_pre:
        raise ConstructionFailed(
            f"{family} q={q}: assembled {pre.size} points, expected {expected_pre}")
    if not is_identifying(g, pre):
        raise ConstructionFailed(f"{family} q={q}: assembled set is not identifying")
    code = prune(g, pre, Property.IDENTIFYING)
    best_lower = report(g).best_lower() or 0
    return Construction(family, q, g, pre, code, table_size, family_bound, best_lower)


# -- T2*(O) -----------------------------------------------------------------------


def construct_t2star(q: int, g: Graph | None = None) -> Construction:
    """Three concurrent lines through the nucleus direction, spanning PG(3,q).

    The 3q affine points of three lines through N whose directions span the
    space form an identifying code; pruning brings it to 3q-3.
    """
    if g is None:
        g = families.gq_t2star(q)
    spec = g.labels[0].spec
    nucleus = ProjPoint(spec, (0, 0, 1, 0))

    def line_vertices(a: int, b: int, c: int) -> list[int]:
        return [(a * q + t) * q + c for t in range(q)]  # vary X2 along N

    def anchor(v: int) -> tuple[int, int, int]:
        _, a, b, c = g.labels[v].key
        return a, b, c

    a1 = 0
    ell1 = line_vertices(*anchor(a1))
    a2 = next(v for v in range(g.n)
              if v not in set(ell1)
              and span_rank([nucleus, g.labels[a1], g.labels[v]]) == 3)
    ell2 = line_vertices(*anchor(a2))
    a3 = next((v for v in range(g.n)
               if span_rank([nucleus, g.labels[a1], g.labels[a2], g.labels[v]]) == 4),
              None)
    if a3 is None:
        raise ConstructionFailed("no spanning third line through the nucleus")
    ell3 = line_vertices(*anchor(a3))

    members = set(ell1) | set(ell2) | set(ell3)
    return _certify(g, members, "gq-t2star", q, 3 * q,
                    3 * q - 3, t2star_family_bound(q))


def code_t2star(q: int) -> VertexSet:
    return construct_t2star(q).code


# -- Q(4,q) -----------------------------------------------------------------------


def construct_parabolic(q: int, g: Graph | None = None) -> Construction:
    """Three disjoint lines of the X0=0 grid plus two lines leaving it.

    The hyperplane X0=0 cuts the parabolic quadric in a hyperbolic grid;
    three pairwise disjoint grid lines, two points P1, P2 on the third and
    one non-grid line through each give 5q+3 points; pruning targets 5q-2.
    """
    if g is None:
        g = families.gq_parabolic(q)
    lines = _lines_of(g)
    section = {v for v in range(g.n) if g.labels[v].key[0] == 0}
    grid = [L for L in lines if L <= section]
    ell0 = grid[0]
    ell1 = next(L for L in grid if not L & ell0)
    ell2 = next(L for L in grid if not L & ell0 and not L & ell1)
    p1, p2 = sorted(ell2)[:2]
    m1 = next(L for L in lines if p1 in L and not L <= section)
    m2 = next(L for L in lines if p2 in L and not L <= section)

    members = set().union(ell0, ell1, ell2, m1, m2)
    return _certify(g, members, "gq-parabolic", q, 5 * q + 3,
                    5 * q - 2, 3 * q - 4)


def code_parabolic(q: int) -> VertexSet:
    return construct_parabolic(q).code


# -- Q-(5,q) ----------------------------------------------------------------------


def _space_basis(g: Graph, lines: list[frozenset[int]]) -> list[ProjPoint]:
    basis = []
    for L in lines:
        basis.extend(_line_points(g, L)[:2])
    return basis


def _section_of(g: Graph, basis: list[ProjPoint], rank: int) -> set[int]:
    """Vertices whose points lie in the projective span of the basis."""
    return {v for v in range(g.n)
            if span_rank(basis + [g.labels[v]]) == rank}


def construct_elliptic(q: int, g: Graph | None = None) -> Construction:
    """A line ell0 plus disjoint line pairs in two hyperbolic 3-space sections.

    The two 3-spaces meet exactly in ell0 and cut the elliptic quadric in
    (q+1)^2-point grids; the five lines carry 5q+5 points, pruned to 5q.
    """
    if g is None:
        g = families.gq_elliptic(q)
    lines = _lines_of(g)
    ell0 = lines[0]
    sq = (q + 1) * (q + 1)

    def hyperbolic_partner(disallowed_basis) -> tuple[frozenset[int], set[int]]:
        for L in lines:
            if L & ell0:
                continue
            basis = _space_basis(g, [ell0, L])
            if disallowed_basis is not None and \
               span_rank(disallowed_basis + basis) != 6:
                continue
            section = _section_of(g, basis, 4)
            if len(section) == sq:
                return L, section
        raise ConstructionFailed("no hyperbolic 3-space section through ell0")

    ell1, section1 = hyperbolic_partner(None)
    ell2 = next((L for L in lines
                 if L <= section1 and not L & ell0 and not L & ell1), None)
    if ell2 is None:
        raise ConstructionFailed("no third disjoint line in the first grid")
    basis1 = _space_basis(g, [ell0, ell1])
    ell3, section2 = hyperbolic_partner(basis1)
    ell4 = next((L for L in lines
                 if L <= section2 and not L & ell0 and not L & ell3), None)
    if ell4 is None:
        raise ConstructionFailed("no third disjoint line in the second grid")

    members = set().union(ell0, ell1, ell2, ell3, ell4)
    return _certify(g, members, "gq-elliptic", q, 5 * q + 5,
                    5 * q, 3 * q + 2)


def code_elliptic(q: int) -> VertexSet:
    return construct_elliptic(q).code


# -- H(3,q^2) ---------------------------------------------------------------------


def construct_hermitian(q: int, g: Graph | None = None) -> Construction:
    """Three disjoint lines plus a line through each of two points of L0.

    M1, M2 must avoid L1 and L2; not every disjoint triple admits them, so
    the scan advances through (L1, L2, P1, P2) candidates until both exist.
    """
    if g is None:
        g = families.gq_hermitian(q)
    lines = _lines_of(g)
    l0 = lines[0]
    through = {v: [L for L in lines if v in L] for v in range(g.n)}

    for l1 in lines:
        if l1 & l0:
            continue
        for l2 in lines:
            if l2 == l1 or l2 & l0 or l2 & l1:
                continue
            for p1, p2 in itertools.permutations(sorted(l0), 2):
                m1 = next((L for L in through[p1]
                           if L != l0 and not L & l1 and not L & l2), None)
                if m1 is None:
                    continue
                m2 = next((L for L in through[p2]
                           if L != l0 and L != m1 and not L & l1 and not L & l2), None)
                if m2 is None:
                    continue
                members = set().union(l0, l1, l2, m1, m2)
                return _certify(g, members, "gq-hermitian", q, 5 * q * q + 3,
                                5 * q * q - 2, 2 * q * q - 2)
    raise ConstructionFailed("no admissible line configuration found")


def code_hermitian(q: int) -> VertexSet:
    return construct_hermitian(q).code


CONSTRUCTORS = {
    "gq-t2star": construct_t2star,
    "gq-parabolic": construct_parabolic,
    "gq-elliptic": construct_elliptic,
    "gq-hermitian": construct_hermitian,
}


def construct(family: str, q: int) -> Construction:
    key = family if family.startswith("gq-") else f"gq-{family}"
    if key not in CONSTRUCTORS:
        raise BadParams(f"no construction for family {family!r}")
    return CONSTRUCTORS[key](q)


_COPLANARITY_RANK = {
    "gq-parabolic": 3,   # common neighbours of non-adjacent points are coplanar
    "gq-elliptic": 4,    # ... lie in a 3-space
    "gq-hermitian": 2,   # ... lie on a line
}


def check_coplanarity_lemmas(q: int, family: str, *, sample: int | None = None,
                             seed: int = 0) -> bool:
    """Span-rank check on the common neighbours of non-adjacent pairs.

    Exhaustive when sample is None; otherwise tests `sample` random pairs.
    """
    key = family if family.startswith("gq-") else f"gq-{family}"
    if key not in _COPLANARITY_RANK:
        raise BadParams(f"no coplanarity lemma for family {family!r}")
    g = families.GQ_GENERATORS[key](q)
    limit = _COPLANARITY_RANK[key]
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if not (g.adj[u] >> v) & 1]
    if sample is not None:
        pairs = random.Random(seed).sample(pairs, min(sample, len(pairs)))
    for u, v in pairs:
        common = g.adj[u] & g.adj[v]
        pts = [g.labels[w] for w in bits(common)]
        if pts and span_rank(pts) > limit:
            return False
    return True
