"""Generators for the graph families under study.

Every generator returns a Graph whose vertex order is the lexicographic
order of its labels, with FamilyMeta carrying the claimed parameters.
Claimed strongly-regular parameters are re-derived from the built graph
before the generator returns; a mismatch is a bug, not a user error.
"""

from __future__ import annotations

import itertools
import math

from . import pg
from .errors import BadParams, SizeGuard
from .gf import field
from .graph import FamilyMeta, Graph, check_srg

MAX_HYPERCUBE = 2**20


def _verify_srg(g: Graph) -> Graph:
    if g.meta.claimed_srg is not None:
        got = check_srg(g)
        assert got == g.meta.claimed_srg, \
            f"{g.meta.family}: claimed srg{g.meta.claimed_srg}, built srg{got}"
    return g


def complete(p: int) -> Graph:
    """The clique K_p."""
    if p < 1:
        raise BadParams("complete graph needs p >= 1")
    adj = [((1 << p) - 1) ^ (1 << u) for u in range(p)]
    meta = FamilyMeta("complete", {"p": p}, claimed_vertex_transitive=True)
    return Graph(p, adj, labels=list(range(p)), meta=meta)


def cycle_power(n: int, r: int = 1) -> Graph:
    """C_n^r: vertices 0..n-1, i ~ j iff circular distance is in [1, r]."""
    if n < 5:
        raise BadParams("cycle power needs n >= 5")
    if not 1 <= r < (n - 1) // 2:
        raise BadParams(f"cycle power needs 1 <= r < (n-1)//2, got r={r}, n={n}")
    adj = [0] * n
    for i in range(n):
        for off in range(1, r + 1):
            adj[i] |= 1 << ((i + off) % n)
            adj[i] |= 1 << ((i - off) % n)
    meta = FamilyMeta("cycle", {"n": n, "r": r}, claimed_vertex_transitive=True)
    return Graph(n, adj, labels=list(range(n)), meta=meta)


def hypercube_power(length: int, r: int = 1) -> Graph:
    """H_length^r: binary words, adjacent iff Hamming distance is in [1, r]."""
    if length < 3:
        raise BadParams("hypercube needs length >= 3")
    if not 1 <= r < length:
        raise BadParams(f"hypercube power needs 1 <= r < length, got {r}")
    n = 1 << length
    if n > MAX_HYPERCUBE:
        raise SizeGuard(f"2^{length} vertices exceed the supported size")
    adj = [0] * n
    for u in range(n):
        row = 0
        for v in range(n):
            if u != v and 1 <= (u ^ v).bit_count() <= r:
                row |= 1 << v
        adj[u] = row
    labels = [format(u, f"0{length}b") for u in range(n)]
    meta = FamilyMeta("hypercube", {"l": length, "r": r}, claimed_vertex_transitive=True)
    return Graph(n, adj, labels=labels, meta=meta)


def paley(q: int) -> Graph:
    """Paley graph on GF(q), q = 1 mod 4: a ~ b iff a - b is a nonzero square."""
    spec = None
    for p in range(2, q + 1):
        if q % p == 0:
            k = round(math.log(q, p))
            if p**k == q:
                spec = field(p, k)
            break
    if spec is None or spec.q != q:
        raise BadParams(f"{q} is not a prime power")
    if q % 4 != 1:
        raise BadParams("Paley graph needs q = 1 mod 4")
    square = [False] * q
    for v in range(1, q):
        square[v] = spec._log[v] % 2 == 0
    adj = [0] * q
    for a in range(q):
        for b in range(a + 1, q):
            if square[spec._sub(a, b)]:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    labels = [str(spec.element(v)) for v in range(q)]
    meta = FamilyMeta("paley", {"q": q}, claimed_vertex_transitive=True,
                      claimed_srg=(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4))
    return _verify_srg(Graph(q, adj, labels=labels, meta=meta))


def _two_subsets(m: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(m), 2))


def kneser2(m: int) -> Graph:
    """Kneser graph K(m,2): 2-subsets of [m], adjacent iff disjoint."""
    if m < 5:
        raise BadParams("Kneser K(m,2) needs m >= 5")
    if m > 64:
        raise SizeGuard("Kneser K(m,2) supported up to m = 64")
    verts = _two_subsets(m)
    n = len(verts)
    adj = [0] * n
    for i, a in enumerate(verts):
        for j in range(i + 1, n):
            if not set(a) & set(verts[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    meta = FamilyMeta("kneser2", {"m": m}, claimed_vertex_transitive=True,
                      claimed_srg=(n, math.comb(m - 2, 2),
                                   math.comb(m - 4, 2), math.comb(m - 3, 2)))
    labels = [f"{a},{b}" for a, b in verts]
    return _verify_srg(Graph(n, adj, labels=labels, meta=meta))


def johnson2(m: int) -> Graph:
    """Johnson graph J(m,2): 2-subsets of [m], adjacent iff they share a point."""
    if m < 4:
        raise BadParams("Johnson J(m,2) needs m >= 4")
    if m > 64:
        raise SizeGuard("Johnson J(m,2) supported up to m = 64")
    verts = _two_subsets(m)
    n = len(verts)
    adj = [0] * n
    for i, a in enumerate(verts):
        for j in range(i + 1, n):
            if len(set(a) & set(verts[j])) == 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    meta = FamilyMeta("johnson2", {"m": m}, claimed_vertex_transitive=True,
                      claimed_srg=(n, 2 * (m - 2), m - 2, 4))
    labels = [f"{a},{b}" for a, b in verts]
    return _verify_srg(Graph(n, adj, labels=labels, meta=meta))


# -- graph products ---------------------------------------------------------------


def _product(g: Graph, h: Graph, name: str, rule) -> Graph:
    if g.n == 0 or h.n == 0:
        raise BadParams("product factors must be nonempty")
    n = g.n * h.n
    adj = [0] * n
    for ug in range(g.n):
        for uh in range(h.n):
            u = ug * h.n + uh
            row = 0
            for vg in range(g.n):
                ag = (g.adj[vg] >> ug) & 1
                for vh in range(h.n):
                    v = vg * h.n + vh
                    if v != u and rule(ug == vg, ag, uh == vh, (h.adj[vh] >> uh) & 1):
                        row |= 1 << v
            adj[u] = row
    glabels = g.labels if g.labels is not None else list(range(g.n))
    hlabels = h.labels if h.labels is not None else list(range(h.n))
    labels = [f"({glabels[i]}|{hlabels[j]})" for i in range(g.n) for j in range(h.n)]
    meta = FamilyMeta(name, {"left": g.meta.family, "right": h.meta.family},
                      claimed_vertex_transitive=(g.meta.claimed_vertex_transitive
                                                 and h.meta.claimed_vertex_transitive))
    return Graph(n, adj, labels=labels, meta=meta)


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product: move along one coordinate at a time."""
    return _product(g, h, "cartesian",
                    lambda eq_g, adj_g, eq_h, adj_h:
                    (eq_g and adj_h) or (eq_h and adj_g))


def direct(g: Graph, h: Graph) -> Graph:
    """Direct (tensor) product: move along both coordinates."""
    return _product(g, h, "direct",
                    lambda eq_g, adj_g, eq_h, adj_h: adj_g and adj_h)


def lexicographic(g: Graph, h: Graph) -> Graph:
    """Lexicographic product: first coordinate dominates."""
    return _product(g, h, "lexicographic",
                    lambda eq_g, adj_g, eq_h, adj_h: adj_g or (eq_g and adj_h))


# -- generalized quadrangles -------------------------------------------------------


def gq_t2star(q: int) -> Graph:
    """T2*(O) for a hyperconic O: the affine points of PG(3,q), q = 2^e > 2,
    two points adjacent iff their connecting line hits O at infinity.

    A GQ(q-1, q+1); vertices are labelled by their projective points.
    """
    e = q.bit_length() - 1
    if q <= 2 or q != 1 << e:
        raise BadParams("T2*(O) needs q = 2^e with q > 2")
    if q > 16:
        raise SizeGuard("T2*(O) supported up to q = 16")
    spec = field(2, e)
    conic, nucleus = pg.hyperconic(spec)
    oval = conic + [nucleus]
    n = q**3

    def vid(a: int, b: int, c: int) -> int:
        return (a * q + b) * q + c

    adj = [0] * n
    for d in oval:
        _, d1, d2, d3 = d.key
        seen = 0
        for a in range(q):
            for b in range(q):
                for c in range(q):
                    u = vid(a, b, c)
                    if (seen >> u) & 1:
                        continue
                    line = [vid(spec._add(a, spec._mul(t, d1)),
                                spec._add(b, spec._mul(t, d2)),
                                spec._add(c, spec._mul(t, d3)))
                            for t in range(q)]
                    lm = 0
                    for v in line:
                        lm |= 1 << v
                    seen |= lm
                    for v in line:
                        adj[v] |= lm & ~(1 << v)
    labels = [pg.ProjPoint(spec, (1, a, b, c))
              for a in range(q) for b in range(q) for c in range(q)]
    s, t = q - 1, q + 1
    meta = FamilyMeta("gq-t2star", {"q": q}, claimed_vertex_transitive=True,
                      claimed_srg=(n, s * (t + 1), s - 1, t + 1), claimed_gq=(s, t))
    return _verify_srg(Graph(n, adj, labels=labels, meta=meta))


def _variety_gq(form, spec, name, q, s, t) -> Graph:
    verts = pg.variety_points(form, spec)
    n = len(verts)
    expected = (s * t + 1) * (s + 1)
    assert n == expected, f"{name}: {n} variety points, expected {expected}"
    keys = [p.key for p in verts]
    adj = [0] * n
    for i in range(n):
        ki = keys[i]
        for j in range(i + 1, n):
            if form.polar_vals(ki, keys[j]) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    meta = FamilyMeta(name, {"q": q}, claimed_vertex_transitive=True,
                      claimed_srg=(n, s * (t + 1), s - 1, t + 1), claimed_gq=(s, t))
    return _verify_srg(Graph(n, adj, labels=verts, meta=meta))


def _check_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k = round(math.log(q, p))
            if p**k == q:
                return p, k
            break
    raise BadParams(f"{q} is not a prime power")


def gq_parabolic(q: int) -> Graph:
    """Q(4,q): the parabolic quadric X0^2 + X1X2 + X3X4 = 0 in PG(4,q); GQ(q,q)."""
    p, k = _check_prime_power(q)
    if q > 9:
        raise SizeGuard("Q(4,q) supported up to q = 9")
    spec = field(p, k)
    return _variety_gq(pg.parabolic_form(spec), spec, "gq-parabolic", q, q, q)


def gq_elliptic(q: int) -> Graph:
    """Q-(5,q): an elliptic quadric in PG(5,q); GQ(q, q^2)."""
    p, k = _check_prime_power(q)
    if q > 5:
        raise SizeGuard("Q-(5,q) supported up to q = 5")
    spec = field(p, k)
    return _variety_gq(pg.elliptic_form(spec), spec, "gq-elliptic", q, q, q * q)


def gq_hermitian(q: int) -> Graph:
    """H(3,q^2): the Hermitian variety sum X_i^(q+1) = 0 in PG(3,q^2); GQ(q^2,q)."""
    p, k = _check_prime_power(q)
    if q > 4:
        raise SizeGuard("H(3,q^2) supported up to q = 4")
    spec = field(p, 2 * k)
    return _variety_gq(pg.hermitian_form(spec, q), spec, "gq-hermitian", q, q * q, q)


GQ_GENERATORS = {
    "gq-t2star": gq_t2star,
    "gq-parabolic": gq_parabolic,
    "gq-elliptic": gq_elliptic,
    "gq-hermitian": gq_hermitian,
}


def gq_lines(g: Graph) -> list[frozenset[int]]:
    """The lines of a GQ adjacency graph, as vertex sets.

    The line through adjacent u, v is {u, v} plus their common neighbours;
    valid because generalized quadrangles have no triangles off a line.
    """
    lines = set()
    for u in range(g.n):
        row = g.adj[u] >> (u + 1)
        v = u + 1
        while row:
            if row & 1:
                common = g.adj[u] & g.adj[v]
                lines.add(frozenset([u, v] + [w for w in _bits(common)]))
            row >>= 1
            v += 1
    return sorted(lines, key=sorted)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
