"""Verifiers for domination/separation-style vertex set properties.

All five properties reduce to popcount scans over closed-neighbourhood
bitmasks, with early exit; the hitting-set extraction turns a graph into the
covering instance whose optimal solutions are its minimum identifying codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import Disconnected, PropertyViolated, TwinsPresent
from .graph import Graph, VertexSet, bfs_dist, has_twins, is_connected

__all__ = [
    "VertexSet", "Property", "Witness", "HittingInstance",
    "is_dominating", "is_separating", "is_identifying",
    "is_locating_dominating", "is_resolving", "check_property",
    "witness_failure", "prune", "build_hitting_instance",
]


class Property(Enum):
    DOMINATING = "dominating"
    SEPARATING = "separating"
    IDENTIFYING = "identifying"
    LOCATING_DOMINATING = "locating-dominating"
    RESOLVING = "resolving"

    @classmethod
    def parse(cls, name: str) -> "Property":
        name = name.strip().lower().replace("_", "-")
        aliases = {"id": cls.IDENTIFYING, "ld": cls.LOCATING_DOMINATING,
                   "sep": cls.SEPARATING, "dom": cls.DOMINATING}
        if name in aliases:
            return aliases[name]
        for p in cls:
            if p.value == name:
                return p
        raise ValueError(f"unknown property {name!r}")


@dataclass(frozen=True)
class Witness:
    """Why a property fails: an undominated vertex or an unseparated pair."""
    kind: str               # "undominated" | "unseparated"
    vertices: tuple[int, ...]

    def __str__(self):
        return f"{self.kind} {' '.join(str(v) for v in self.vertices)}"


def _dominating_witness(g: Graph, mask: int) -> Witness | None:
    for u in range(g.n):
        if g.closed_row(u) & mask == 0:
            return Witness("undominated", (u,))
    return None


def _separating_witness(g: Graph, mask: int) -> Witness | None:
    rows = [g.closed_row(u) for u in range(g.n)]
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            if (ru ^ rows[v]) & mask == 0:
                return Witness("unseparated", (u, v))
    return None


def _ld_witness(g: Graph, mask: int) -> Witness | None:
    w = _dominating_witness(g, mask)
    if w is not None:
        return w
    rows = [g.closed_row(u) for u in range(g.n)]
    for u in range(g.n):
        if (mask >> u) & 1:
            continue
        ru = rows[u]
        for v in range(u + 1, g.n):
            if (mask >> v) & 1:
                continue
            if (ru ^ rows[v]) & mask == 0:
                return Witness("unseparated", (u, v))
    return None


def _resolving_witness(g: Graph, mask: int) -> Witness | None:
    if not is_connected(g):
        raise Disconnected("resolving sets need a connected graph")
    landmarks = list(VertexSet(g.n, mask))
    dists = [bfs_dist(g, x) for x in landmarks]
    vectors = [tuple(d[u] for d in dists) for u in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if vectors[u] == vectors[v]:
                return Witness("unseparated", (u, v))
    return None


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """Every closed neighbourhood meets s."""
    return _dominating_witness(g, s.mask) is None


def is_separating(g: Graph, s: VertexSet) -> bool:
    """Every pair of distinct vertices has a separator in s."""
    return _separating_witness(g, s.mask) is None


def is_identifying(g: Graph, s: VertexSet) -> bool:
    """Dominating and separating: every N[u] & s is nonempty and unique."""
    dom = is_dominating(g, s)
    sep = is_separating(g, s)
    both = _identifying_direct(g, s.mask)
    assert both == (dom and sep), "identifying must equal dominating and separating"
    return both


def _identifying_direct(g: Graph, mask: int) -> bool:
    traces = set()
    for u in range(g.n):
        tr = g.closed_row(u) & mask
        if tr == 0 or tr in traces:
            return False
        traces.add(tr)
    return True


def is_locating_dominating(g: Graph, s: VertexSet) -> bool:
    """Dominating, and separating all pairs of vertices outside s."""
    return _ld_witness(g, s.mask) is None


def is_resolving(g: Graph, s: VertexSet) -> bool:
    """Every vertex gets a distinct distance vector to s (connected graphs)."""
    return _resolving_witness(g, s.mask) is None


_WITNESS = {
    Property.DOMINATING: _dominating_witness,
    Property.SEPARATING: _separating_witness,
    Property.LOCATING_DOMINATING: _ld_witness,
    Property.RESOLVING: _resolving_witness,
}


def _identifying_witness(g: Graph, mask: int) -> Witness | None:
    return _dominating_witness(g, mask) or _separating_witness(g, mask)


_WITNESS[Property.IDENTIFYING] = _identifying_witness


def check_property(g: Graph, s: VertexSet, prop: Property) -> bool:
    return _WITNESS[prop](g, s.mask) is None


def witness_failure(g: Graph, s: VertexSet, prop: Property) -> Witness | None:
    """None when the property holds, else the lex-smallest failure witness."""
    return _WITNESS[prop](g, s.mask)


def prune(g: Graph, s: VertexSet, prop: Property) -> VertexSet:
    """Inclusion-minimal subset of s still satisfying prop.

    Removal attempts run in descending vertex index; a single pass reaches
    inclusion-minimality because all five properties are monotone.
    """
    checker = _WITNESS[prop]
    if checker(g, s.mask) is not None:
        raise PropertyViolated(f"set does not satisfy {prop.value} before pruning")
    mask = s.mask
    for v in sorted(s.members(), reverse=True):
        trial = mask & ~(1 << v)
        if checker(g, trial) is None:
            mask = trial
    return VertexSet(g.n, mask)


@dataclass(frozen=True)
class Constraint:
    """One hyperedge to hit, tagged with the requirements it merged."""
    mask: int
    tags: tuple[tuple, ...]   # ("domination", u) or ("separation", u, v)


@dataclass(frozen=True)
class HittingInstance:
    """Hitting-set form of the identifying code problem (or a variant)."""
    n: int
    constraints: tuple[Constraint, ...]
    r: int                     # max constraint membership over the vertices

    @property
    def masks(self) -> list[int]:
        return [c.mask for c in self.constraints]


def _make_instance(n: int, tagged_masks) -> HittingInstance:
    merged: dict[int, list[tuple]] = {}
    order: list[int] = []
    for mask, tag in tagged_masks:
        if mask not in merged:
            merged[mask] = []
            order.append(mask)
        merged[mask].append(tag)
    constraints = tuple(Constraint(m, tuple(merged[m])) for m in order)
    r = 0
    for u in range(n):
        bit = 1 << u
        r = max(r, sum(1 for c in constraints if c.mask & bit))
    return HittingInstance(n, constraints, r)


def build_hitting_instance(g: Graph) -> HittingInstance:
    """Domination and separation constraints of g, deduplicated.

    For a k-regular graph the membership count of any vertex is at most
    (n-k)*(k+1); that bound is asserted (it underlies the greedy guarantee).
    """
    if has_twins(g):
        raise TwinsPresent("twin vertices admit no identifying code")
    rows = [g.closed_row(u) for u in range(g.n)]
    tagged = [(rows[u], ("domination", u)) for u in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            tagged.append((rows[u] ^ rows[v], ("separation", u, v)))
    inst = _make_instance(g.n, tagged)
    degs = {row.bit_count() for row in g.adj}
    if len(degs) == 1:
        k = degs.pop()
        assert inst.r <= (g.n - k) * (k + 1), "hypergraph degree bound violated"
    return inst


def ld_instance(g: Graph) -> HittingInstance:
    """Hitting-set form of locating-domination.

    A pair u, v needs either a separator or one of u, v itself in the set, so
    its constraint is (N[u] ^ N[v]) | {u, v}.
    """
    rows = [g.closed_row(u) for u in range(g.n)]
    tagged = [(rows[u], ("domination", u)) for u in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            tagged.append(((rows[u] ^ rows[v]) | (1 << u) | (1 << v),
                           ("separation", u, v)))
    return _make_instance(g.n, tagged)


def separating_instance(g: Graph) -> HittingInstance:
    if has_twins(g):
        raise TwinsPresent("twin vertices admit no separating set")
    rows = [g.closed_row(u) for u in range(g.n)]
    tagged = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            tagged.append((rows[u] ^ rows[v], ("separation", u, v)))
    return _make_instance(g.n, tagged)


def resolving_instance(g: Graph) -> HittingInstance:
    """Per pair, the set of vertices seeing u and v at different distances."""
    if not is_connected(g):
        raise Disconnected("resolving sets need a connected graph")
    dist = [bfs_dist(g, u) for u in range(g.n)]
    tagged = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            mask = 0
            for x in range(g.n):
                if dist[x][u] != dist[x][v]:
                    mask |= 1 << x
            tagged.append((mask, ("separation", u, v)))
    return _make_instance(g.n, tagged)
