"""Immutable graph kernel on bitset adjacency rows.

Rows are Python integers used as bitsets, so symmetric differences and
common-neighbour counts reduce to XOR/AND plus int.bit_count.  Vertex order
is fixed by the generator that built the graph, which keeps every downstream
computation reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadVertex, Disconnected


def bits(mask: int):
    """Indices of the set bits of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FamilyMeta:
    """Family name, parameters and the claims the paper attaches to them.

    Claims are metadata: anything a closed-form bound relies on is re-checked
    against the actual graph before use.
    """
    family: str = "custom"
    params: dict = field(default_factory=dict)
    claimed_vertex_transitive: bool = False
    claimed_srg: tuple[int, int, int, int] | None = None
    claimed_gq: tuple[int, int] | None = None


class VertexSet:
    """An immutable subset of the vertices [0, n), stored as a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise BadVertex(f"mask has bits outside [0, {n})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *args):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, n: int, members) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise BadVertex(f"vertex {v} outside [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def __len__(self):
        return self.size

    def __iter__(self):
        return bits(self.mask)

    def __contains__(self, v: int):
        return 0 <= v < self.n and (self.mask >> v) & 1

    def __eq__(self, other):
        return (isinstance(other, VertexSet)
                and self.n == other.n and self.mask == other.mask)

    def __hash__(self):
        return hash((self.n, self.mask))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & other.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self.n, [v]) | self

    def remove(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v))

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return f"VertexSet({self.members()})"

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.members())

    @classmethod
    def from_text(cls, n: int, text: str) -> "VertexSet":
        return cls.of(n, (int(tok) for tok in text.split()))


class Graph:
    """Undirected simple graph with bitset rows, labels and family metadata."""

    __slots__ = ("n", "adj", "labels", "meta")

    def __init__(self, n: int, adj: list[int], labels=None, meta: FamilyMeta | None = None):
        if len(adj) != n:
            raise BadVertex("adjacency row count differs from n")
        for u, row in enumerate(adj):
            if (row >> u) & 1:
                raise BadVertex(f"loop at vertex {u}")
            if row >> n:
                raise BadVertex(f"row {u} has bits outside [0, {n})")
        for u in range(n):
            for v in bits(adj[u]):
                if not (adj[v] >> u) & 1:
                    raise BadVertex(f"adjacency not symmetric at ({u}, {v})")
        if labels is not None:
            if len(labels) != n:
                raise BadVertex("label count differs from n")
            if len({str(l) for l in labels}) != n:
                raise BadVertex("labels are not unique")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "meta", meta if meta is not None else FamilyMeta())

    def __setattr__(self, *args):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges, labels=None, meta: FamilyMeta | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise BadVertex(f"bad edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels, meta)

    def _check_vertex(self, u: int):
        if not 0 <= u < self.n:
            raise BadVertex(f"vertex {u} outside [0, {self.n})")

    def closed_row(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in bits(row):
                out.append((u, u + 1 + off))
        return out

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()}, family={self.meta.family!r})"


# -- neighbourhood vocabulary ---------------------------------------------------


def closed_nbhd(g: Graph, u: int) -> VertexSet:
    """N[u]: the vertex u together with its neighbours."""
    g._check_vertex(u)
    return VertexSet(g.n, g.closed_row(u))


def symdiff_size(g: Graph, u: int, v: int) -> int:
    """|N[u] symmetric-difference N[v]|."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise BadVertex("symmetric difference needs two distinct vertices")
    return (g.closed_row(u) ^ g.closed_row(v)).bit_count()


def min_symdiff(g: Graph) -> int:
    """Smallest |N[u] ^ N[v]| over all unordered vertex pairs; 0 iff twins."""
    if g.n < 2:
        raise BadVertex("need at least two vertices")
    rows = [g.closed_row(u) for u in range(g.n)]
    best = None
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            d = (ru ^ rows[v]).bit_count()
            if best is None or d < best:
                best = d
                if best == 0:
                    return 0
    return best


def has_twins(g: Graph) -> bool:
    """True iff two vertices share the same closed neighbourhood."""
    seen = set()
    for u in range(g.n):
        row = g.closed_row(u)
        if row in seen:
            return True
        seen.add(row)
    return False


def degrees(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree)."""
    degs = [row.bit_count() for row in g.adj]
    return min(degs), max(degs)


def bfs_dist(g: Graph, src: int) -> list[int]:
    """Distances from src; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        for u in bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d >= 0 for d in bfs_dist(g, 0))


def diameter(g: Graph) -> int:
    """Maximum distance between any pair; raises Disconnected otherwise."""
    best = 0
    for u in range(g.n):
        dist = bfs_dist(g, u)
        if min(dist) < 0:
            raise Disconnected("diameter undefined on a disconnected graph")
        best = max(best, max(dist))
    return best


def check_srg(g: Graph) -> tuple[int, int, int, int] | None:
    """SRG parameters (n, k, lambda, mu) if g is strongly regular, else None.

    Requires a regular graph with constant common-neighbour counts over both
    the adjacent and the non-adjacent pairs; graphs with no adjacent pair or
    no non-adjacent pair do not qualify.  The returned parameters always
    satisfy (n-k-1)*mu = k*(k-lambda-1).
    """
    n = g.n
    if n < 2:
        return None
    k = g.adj[0].bit_count()
    if any(row.bit_count() != k for row in g.adj):
        return None
    lam = mu = None
    for u in range(n):
        au = g.adj[u]
        for v in range(u + 1, n):
            common = (au & g.adj[v]).bit_count()
            if (au >> v) & 1:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    assert (n - k - 1) * mu == k * (k - lam - 1), "SRG parameter identity violated"
    return (n, k, lam, mu)


# -- text serialization ----------------------------------------------------------
#
# Format: header "n m", one "u v" line per edge (sorted), then optional
# "#label u <string>" lines.  Deterministic: identical graphs serialize to
# identical bytes.


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    if g.labels is not None:
        lines.extend(f"#label {u} {g.labels[u]}" for u in range(g.n))
    return "\n".join(lines) + "\n"


def read_graph(text: str, meta: FamilyMeta | None = None) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph file")
    head = lines[0].split()
    n, m = int(head[0]), int(head[1])
    edges = []
    labels: dict[int, str] = {}
    for ln in lines[1:]:
        if ln.startswith("#label"):
            _, u, rest = ln.split(" ", 2)
            labels[int(u)] = rest
        else:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, file has {len(edges)}")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise ValueError("labels must cover every vertex or none")
        label_list = [labels[u] for u in range(n)]
    return Graph.from_edges(n, edges, label_list, meta)
