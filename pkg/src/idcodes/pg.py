"""Projective spaces PG(n,q): points, lines, quadratic and Hermitian forms.

Points are held in a canonical form (leftmost nonzero coordinate scaled to 1)
so that equal points have identical coordinate tuples and the enumeration
order is reproducible.  Collinearity on a variety is decided through the
polar pairing of its form, which is O(1) per pair.
"""

from __future__ import annotations

import itertools
import warnings

from .errors import EqualPoints, NotOnVariety, OddCharacteristic, SizeGuard
from .gf import FieldElement, FieldSpec, conj

MAX_DIM = 5
MAX_Q = 16
WARN_POINTS = 200_000


class ProjPoint:
    """A point of PG(n,q), stored normalized."""

    __slots__ = ("spec", "coords", "key")

    def __init__(self, spec: FieldSpec, vals: tuple[int, ...]):
        # vals must already be normalized; use point() to build from raw data
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "key", vals)
        object.__setattr__(self, "coords",
                           tuple(FieldElement(spec, v) for v in vals))

    def __setattr__(self, *args):
        raise AttributeError("ProjPoint is immutable")

    @property
    def dim(self) -> int:
        return len(self.key) - 1

    def __eq__(self, other):
        return (isinstance(other, ProjPoint)
                and self.spec == other.spec and self.key == other.key)

    def __hash__(self):
        return hash((self.spec._key, self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return "(" + ";".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


def normalize_vals(spec: FieldSpec, vals) -> tuple[int, ...]:
    """Scale a nonzero coordinate vector so its first nonzero entry is 1."""
    vals = tuple(v.val if isinstance(v, FieldElement) else v % spec.q for v in vals)
    for v in vals:
        if v:
            if v == 1:
                return vals
            inv = spec._inv(v)
            return tuple(spec._mul(inv, w) for w in vals)
    raise ValueError("the zero vector is not a projective point")


def point(spec: FieldSpec, vals) -> ProjPoint:
    """Build the normalized projective point with the given coordinates."""
    return ProjPoint(spec, normalize_vals(spec, vals))


def enumerate_points(n: int, spec: FieldSpec) -> list[ProjPoint]:
    """All points of PG(n,q) in lexicographic order of normalized coordinates."""
    if n > MAX_DIM or spec.q > MAX_Q:
        raise SizeGuard(f"PG({n},{spec.q}) outside supported range")
    count = (spec.q ** (n + 1) - 1) // (spec.q - 1)
    if count > WARN_POINTS:
        warnings.warn(f"enumerating {count} points of PG({n},{spec.q})")
    pts = []
    for lead in range(n, -1, -1):
        prefix = (0,) * lead + (1,)
        for tail in itertools.product(range(spec.q), repeat=n - lead):
            pts.append(ProjPoint(spec, prefix + tail))
    return pts


class LineSet:
    """The q+1 points of a projective line, in canonical order."""

    __slots__ = ("spec", "points", "defining", "_keys")

    def __init__(self, spec: FieldSpec, points: list[ProjPoint],
                 defining: tuple[ProjPoint, ProjPoint]):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "points", tuple(sorted(points)))
        object.__setattr__(self, "defining", defining)
        object.__setattr__(self, "_keys", frozenset(p.key for p in self.points))

    def __setattr__(self, *args):
        raise AttributeError("LineSet is immutable")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p: ProjPoint):
        return p.key in self._keys

    def __eq__(self, other):
        return isinstance(other, LineSet) and self._keys == other._keys

    def __hash__(self):
        return hash(self._keys)

    def meets(self, other: "LineSet") -> bool:
        return not self._keys.isdisjoint(other._keys)


def line_through(a: ProjPoint, b: ProjPoint) -> LineSet:
    """The projective line through two distinct points."""
    if a == b:
        raise EqualPoints("need two distinct points to span a line")
    spec = a.spec
    pts = [a]
    for t in range(spec.q):
        vals = tuple(spec._add(bv, spec._mul(t, av)) for av, bv in zip(a.key, b.key))
        pts.append(ProjPoint(spec, normalize_vals(spec, vals)))
    return LineSet(spec, pts, (a, b))


class FormSpec:
    """A quadratic or Hermitian form on PG(n,q) plus its polar pairing.

    Quadratic forms are given by an upper-triangular coefficient map
    {(i,j): c} meaning sum c*X_i*X_j; the polar pairing is
    B(x,y) = Q(x+y) - Q(x) - Q(y).  Hermitian forms are the diagonal
    sum X_i^(q0+1) over GF(q0^2) with pairing sum x_i * conj(y_i).
    """

    def __init__(self, kind: str, n: int, spec: FieldSpec,
                 coeffs: dict[tuple[int, int], FieldElement] | None = None,
                 base_q: int | None = None):
        if kind not in ("quadratic", "hermitian"):
            raise ValueError(f"unknown form kind {kind!r}")
        self.kind = kind
        self.n = n
        self.spec = spec
        if kind == "quadratic":
            assert coeffs is not None
            self._coeffs = {(i, j): (c.val if isinstance(c, FieldElement) else c % spec.q)
                            for (i, j), c in coeffs.items()}
            for i, j in self._coeffs:
                if i > j:
                    raise ValueError("quadratic coefficients must be upper triangular")
        else:
            assert base_q is not None and spec.q == base_q * base_q
            self.base_q = base_q
            self._conj_tab = [spec._pow(v, base_q) for v in range(spec.q)]

    # -- int-level evaluation (hot paths) ---------------------------------------

    def eval_vals(self, vals: tuple[int, ...]) -> int:
        s = self.spec
        acc = 0
        if self.kind == "quadratic":
            for (i, j), c in self._coeffs.items():
                acc = s._add(acc, s._mul(c, s._mul(vals[i], vals[j])))
        else:
            e = self.base_q + 1
            for v in vals:
                acc = s._add(acc, s._pow(v, e))
        return acc

    def polar_vals(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        s = self.spec
        if self.kind == "quadratic":
            xy = tuple(s._add(a, b) for a, b in zip(x, y))
            return s._sub(self.eval_vals(xy),
                          s._add(self.eval_vals(x), self.eval_vals(y)))
        acc = 0
        for a, b in zip(x, y):
            acc = s._add(acc, s._mul(a, self._conj_tab[b]))
        return acc

    # -- point-level API -----------------------------------------------------------

    def eval(self, p: ProjPoint) -> FieldElement:
        return FieldElement(self.spec, self.eval_vals(p.key))

    def polar(self, a: ProjPoint, b: ProjPoint) -> FieldElement:
        return FieldElement(self.spec, self.polar_vals(a.key, b.key))


def parabolic_form(spec: FieldSpec) -> FormSpec:
    """X0^2 + X1*X2 + X3*X4 on PG(4,q)."""
    one = spec.one
    return FormSpec("quadratic", 4, spec, coeffs={(0, 0): one, (1, 2): one, (3, 4): one})


def elliptic_form(spec: FieldSpec) -> FormSpec:
    """f(X0,X1) + X2*X3 + X4*X5 with f = d*X0^2 + X0*X1 + X1^2 irreducible.

    d is the first element in coefficient-vector order making f irreducible;
    it is recorded as form.elliptic_d.
    """
    one = spec.one
    d_found = None
    for cand in sorted(range(spec.q), key=spec.digits):
        if cand == 0:
            continue  # f would factor as X1*(X0 + X1/d) ... degenerate
        # f(x,1) = d x^2 + x + 1 must have no root; f(1,0) = d != 0
        if all(spec._add(spec._add(spec._mul(cand, spec._mul(x, x)), x), 1) != 0
               for x in range(spec.q)):
            d_found = cand
            break
    if d_found is None:
        raise ValueError(f"no irreducible binary quadratic over {spec}")
    form = FormSpec("quadratic", 5, spec, coeffs={
        (0, 0): FieldElement(spec, d_found), (0, 1): one, (1, 1): one,
        (2, 3): one, (4, 5): one})
    form.elliptic_d = FieldElement(spec, d_found)
    return form


def hermitian_form(spec: FieldSpec, base_q: int) -> FormSpec:
    """X0^(q+1) + X1^(q+1) + X2^(q+1) + X3^(q+1) on PG(3,q^2)."""
    return FormSpec("hermitian", 3, spec, base_q=base_q)


def conic_form(spec: FieldSpec) -> FormSpec:
    """X1*X3 - X2^2 on the coordinates of PG(3,q); cuts the conic inside X0=0."""
    return FormSpec("quadratic", 3, spec,
                    coeffs={(1, 3): spec.one, (2, 2): -spec.one})


def variety_points(form: FormSpec, spec: FieldSpec) -> list[ProjPoint]:
    """All points of PG(form.n, q) where the form vanishes, in lex order."""
    return [p for p in enumerate_points(form.n, spec) if form.eval_vals(p.key) == 0]


def collinear_on_variety(form: FormSpec, a: ProjPoint, b: ProjPoint) -> bool:
    """True iff the whole line ab lies on the variety of the form."""
    if a == b:
        raise EqualPoints("collinearity needs two distinct points")
    if form.eval_vals(a.key) != 0 or form.eval_vals(b.key) != 0:
        raise NotOnVariety("both points must lie on the variety")
    return form.polar_vals(a.key, b.key) == 0


def hyperconic(spec: FieldSpec) -> tuple[list[ProjPoint], ProjPoint]:
    """Conic X1*X3 = X2^2 in the plane X0 = 0 of PG(3,q) plus its nucleus.

    Only exists for characteristic 2; every line of the plane meets the
    returned q+2 points in 0 or 2 points.
    """
    if spec.p != 2:
        raise OddCharacteristic("hyperconic needs characteristic 2")
    form = conic_form(spec)
    pts = [p for p in enumerate_points(3, spec)
           if p.key[0] == 0 and form.eval_vals(p.key) == 0]
    nucleus = ProjPoint(spec, (0, 0, 1, 0))
    return pts, nucleus


def span_rank(points) -> int:
    """Rank over GF(q) of the coordinate matrix of the given points."""
    points = list(points)
    if not points:
        raise ValueError("span_rank needs at least one point")
    spec = points[0].spec
    rows = [list(p.key) for p in points]
    width = len(rows[0])
    rank = 0
    for col in range(width):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = spec._inv(rows[rank][col])
        rows[rank] = [spec._mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [spec._sub(v, spec._mul(f, w))
                           for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
