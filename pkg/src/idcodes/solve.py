"""Exact and approximate optimization over hitting-set instances.

exact_min runs a deterministic branch-and-bound (branch on the smallest
unhit constraint, greedy disjoint-constraint packing as lower bound) and
then lexicographically minimizes the witness among optimal solutions.
frac_lp solves the LP relaxation with an exact rational simplex under
Bland's rule, so optimal values are reproduced as exact fractions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from enum import Enum

from .codes import (
    HittingInstance,
    build_hitting_instance,
    ld_instance,
    resolving_instance,
    separating_instance,
)
from .errors import BudgetExceeded, Infeasible, NotClaimedTransitive, NotRegular, SizeGuard, TwinsPresent
from .graph import Graph, VertexSet, bits, degrees, has_twins, min_symdiff

Rational = Fraction

DEFAULT_NODE_BUDGET = 10**8
DEFAULT_MAX_N = 64
MAX_LP_CONSTRAINTS = 20_000


class Target(Enum):
    """What exact_min optimizes for."""
    ID = "id"
    LD = "ld"
    RESOLVING = "resolving"
    SEPARATING = "separating"

    @classmethod
    def parse(cls, name: str) -> "Target":
        name = name.strip().lower().replace("_", "-")
        for t in cls:
            if t.value == name:
                return t
        raise ValueError(f"unknown solve target {name!r}")


_INSTANCE_BUILDERS = {
    Target.ID: build_hitting_instance,
    Target.LD: ld_instance,
    Target.RESOLVING: resolving_instance,
    Target.SEPARATING: separating_instance,
}


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: VertexSet
    nodes_explored: int
    proof: str                 # "exhausted" | "bound_matched"


def _dedup_masks(masks) -> list[int]:
    seen = set()
    out = []
    for m in masks:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def _drop_supersets(masks: list[int]) -> list[int]:
    """Remove constraints implied by a subset constraint."""
    order = sorted(range(len(masks)), key=lambda i: (masks[i].bit_count(), i))
    kept: list[int] = []
    for i in order:
        m = masks[i]
        if not any(sub & m == sub for sub in kept):
            kept.append(m)
    return kept


class _Engine:
    """Branch and bound over a fixed set of constraint masks."""

    def __init__(self, masks: list[int], budget: int):
        self.masks = masks
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"node budget {self.budget} exhausted")

    def _packing_bound(self, unhit: list[int], excluded: int) -> int:
        used = 0
        count = 0
        for m in sorted(unhit, key=int.bit_count):
            m &= ~excluded
            if m and m & used == 0:
                used |= m
                count += 1
        return count

    def _coverage_order(self, avail: int, unhit: list[int]) -> list[int]:
        cand = list(bits(avail))
        cover = {v: 0 for v in cand}
        for m in unhit:
            for v in cand:
                if (m >> v) & 1:
                    cover[v] += 1
        return sorted(cand, key=lambda v: (-cover[v], v))

    def search(self, chosen: int, count: int, excluded: int,
               best: int, stop_at: int | None = None):
        """Best solution size below `best`, or None.  stop_at short-circuits
        the feasibility version: return as soon as a solution of that size
        or better is found."""
        self._tick()
        unhit = [m for m in self.masks if m & chosen == 0]
        if not unhit:
            return count
        if count + 1 >= best:
            return None
        lb = self._packing_bound(unhit, excluded)
        if count + lb >= best:
            return None
        pick = None
        pick_avail = 0
        for m in unhit:
            avail = m & ~excluded
            if avail == 0:
                return None
            if pick is None or avail.bit_count() < pick_avail.bit_count():
                pick, pick_avail = m, avail
        found = None
        sub_excluded = excluded
        for v in self._coverage_order(pick_avail, unhit):
            got = self.search(chosen | (1 << v), count + 1, sub_excluded,
                              best, stop_at)
            if got is not None and got < best:
                best = got
                found = got
                if stop_at is not None and best <= stop_at:
                    return found
            sub_excluded |= 1 << v
        return found


def greedy_cover(instance: HittingInstance) -> VertexSet:
    """Hit every constraint, largest remaining coverage first (ties: lowest id)."""
    masks = _dedup_masks(instance.masks)
    if any(m == 0 for m in masks):
        raise Infeasible("an empty constraint cannot be hit")
    chosen = 0
    unhit = masks
    while unhit:
        cover = [0] * instance.n
        for m in unhit:
            for v in bits(m):
                cover[v] += 1
        v = max(range(instance.n), key=lambda u: (cover[u], -u))
        chosen |= 1 << v
        unhit = [m for m in unhit if (m >> v) & 1 == 0]
    return VertexSet(instance.n, chosen)


def _instance_of(obj, target: Target) -> tuple[HittingInstance, int]:
    if isinstance(obj, HittingInstance):
        return obj, obj.n
    if isinstance(obj, Graph):
        try:
            return _INSTANCE_BUILDERS[target](obj), obj.n
        except TwinsPresent as e:
            raise Infeasible(str(e)) from e
    raise TypeError(f"expected Graph or HittingInstance, got {type(obj)!r}")


def node_budget_default() -> int:
    env = os.environ.get("IDCODE_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


def exact_min(obj, target: Target = Target.ID, *,
              node_budget: int | None = None,
              max_n: int = DEFAULT_MAX_N) -> SolveResult:
    """Exact minimum-size solution with a lexicographically smallest witness.

    The optimum is established by exhaustive branch and bound; the witness is
    then rebuilt vertex by vertex with feasibility probes, so it is the
    lex-smallest optimal set regardless of search order.
    """
    if isinstance(target, str):
        target = Target.parse(target)
    instance, n = _instance_of(obj, target)
    if n > max_n:
        raise SizeGuard(f"instance has {n} > {max_n} vertices; raise max_n to force")
    budget = node_budget if node_budget is not None else node_budget_default()
    masks = _dedup_masks(instance.masks)
    if any(m == 0 for m in masks):
        raise Infeasible("an empty constraint cannot be hit")
    reduced = _drop_supersets(masks)

    upper = greedy_cover(instance).size
    engine = _Engine(reduced, budget)
    root_lb = engine._packing_bound(reduced, 0)
    if upper == root_lb:
        optimum = upper
        proof = "bound_matched"
    else:
        got = engine.search(0, 0, 0, upper)
        optimum = got if got is not None else upper
        proof = "exhausted"

    # lex-smallest optimal witness via feasibility probes
    chosen = 0
    excluded = 0
    for v in range(n):
        if chosen.bit_count() == optimum:
            break
        trial = chosen | (1 << v)
        need = optimum - trial.bit_count()
        sub = [m for m in reduced if m & trial == 0]
        if any(m & ~excluded == 0 for m in sub):
            feasible = False
        elif not sub:
            feasible = need >= 0
        elif need <= 0:
            feasible = False
        else:
            got = engine.search(trial, 0, excluded, need + 1, stop_at=need)
            feasible = got is not None and got <= need
        if feasible:
            chosen = trial
        else:
            excluded |= 1 << v
    witness = VertexSet(n, chosen)
    return SolveResult(optimum, witness, engine.nodes, proof)


def exhaustive_min(obj, target: Target = Target.ID) -> SolveResult:
    """Independent oracle: try all subsets by increasing size.

    Only sensible for small n; used to cross-check exact_min.
    """
    import itertools

    if isinstance(target, str):
        target = Target.parse(target)
    instance, n = _instance_of(obj, target)
    masks = _dedup_masks(instance.masks)
    if any(m == 0 for m in masks):
        raise Infeasible("an empty constraint cannot be hit")
    nodes = 0
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            nodes += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(m & mask for m in masks):
                return SolveResult(size, VertexSet(n, mask), nodes, "exhausted")
    raise Infeasible("no subset hits every constraint")


def frac_lp(obj) -> Fraction:
    """Optimal value of the LP relaxation, as an exact rational.

    Solves the dual covering LP (max 1.y, A^T y <= 1, y >= 0) with a dense
    tableau simplex under Bland's rule; the x <= 1 bounds of the primal are
    redundant for covering objectives and are dropped.
    """
    if isinstance(obj, Graph):
        obj = build_hitting_instance(obj)
    masks = _dedup_masks(obj.masks)
    if any(m == 0 for m in masks):
        raise Infeasible("an empty constraint cannot be hit")
    if len(masks) > MAX_LP_CONSTRAINTS:
        raise BudgetExceeded(f"{len(masks)} constraints exceed the LP guard")
    n = obj.n
    m = len(masks)
    zero, one = Fraction(0), Fraction(1)
    width = m + n + 1
    rows = []
    for u in range(n):
        row = [one if (masks[j] >> u) & 1 else zero for j in range(m)]
        row.extend(one if i == u else zero for i in range(n))
        row.append(one)
        rows.append(row)
    zrow = [-one] * m + [zero] * (n + 1)
    basis = [m + u for u in range(n)]

    while True:
        enter = next((j for j in range(m + n) if zrow[j] < 0), None)
        if enter is None:
            break
        ratio = None
        leave = None
        for i in range(n):
            a = rows[i][enter]
            if a > 0:
                r = rows[i][width - 1] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave is None:
            raise Infeasible("LP unbounded; covering duals are always bounded")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        for i in range(n):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[leave])]
        if zrow[enter] != 0:
            f = zrow[enter]
            zrow = [v - f * w for v, w in zip(zrow, rows[leave])]
        basis[leave] = enter

    value = sum(rows[i][width - 1] for i in range(n) if basis[i] < m)
    return value


def frac_closed_form(g: Graph) -> Fraction:
    """n / min(k+1, d) for a regular twin-free graph claimed vertex-transitive."""
    dmin, dmax = degrees(g)
    if dmin != dmax:
        raise NotRegular("closed form needs a regular graph")
    if has_twins(g):
        raise TwinsPresent("twin vertices admit no identifying code")
    if not g.meta.claimed_vertex_transitive:
        raise NotClaimedTransitive("closed form is only valid for vertex-transitive graphs")
    return Fraction(g.n, min(dmax + 1, min_symdiff(g)))
