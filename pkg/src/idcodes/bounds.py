"""Closed-form identifying-code bounds, assembled into a tagged report.

Each bound carries its applicability: when a precondition fails the bound is
still listed, with the violated condition as the reason, so reports stay
comparable across graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import Eq1Violated
from .graph import Graph, check_srg, degrees, has_twins, min_symdiff
from .solve import frac_closed_form


def lb_log(n: int) -> int:
    """ceil(log2(n+1)): information-theoretic lower bound for twin-free graphs."""
    return n.bit_length()


def lb_degree(n: int, k: int) -> int:
    """ceil(2n/(k+1)) for maximum degree k."""
    return -(-2 * n // (k + 1))


def lb_discharging(n: int, k: int) -> int | None:
    """Smallest c with 6n <= c^2 + (2k+5)c, if that c is at most k-1.

    The underlying charge argument needs codes smaller than the maximum
    degree, so the value is only meaningful (and only returned) when
    c <= k-1.
    """
    b = 2 * k + 5
    c = max(1, (math.isqrt(b * b + 24 * n) - b) // 2)
    while c * c + b * c < 6 * n:
        c += 1
    while c > 1 and (c - 1) * (c - 1) + b * (c - 1) >= 6 * n:
        c -= 1
    return c if c <= k - 1 else None


def frac_sandwich(frac: Fraction, n: int) -> tuple[int, float]:
    """(ceil(frac), frac*(1+2 ln n)): integer lower and real upper bound.

    The upper bound stays real-valued; rounding it down before comparisons
    would not be sound.
    """
    lower = -(-frac.numerator // frac.denominator)
    upper = float(frac) * (1 + 2 * math.log(n))
    return lower, upper


def srg_analysis(params: tuple[int, int, int, int]) -> dict:
    """Derived quantities of srg(n,k,lambda,mu): d, primitivity, complement."""
    n, k, lam, mu = params
    if (n - k - 1) * mu != k * (k - lam - 1):
        raise Eq1Violated(f"srg{params} violates (n-k-1)mu = k(k-lam-1)")
    d = 2 * k - 2 * max(lam + 1, mu - 1)
    primitive = mu not in (0, k)
    out = {
        "d": d,
        "primitive": primitive,
        "complement": (n, n - 1 - k, n - 2 - 2 * k + mu, n - 2 * k + lam),
        "degree_check": None,
        "symdiff_check": None,
    }
    if primitive:
        out["degree_check"] = k * k >= n - 1          # k >= sqrt(n-1)
        out["symdiff_check"] = (d + 3) ** 2 > n       # d > sqrt(n) - 3
    return out


def gq_analysis(s: int, t: int, claimed_transitive: bool = True) -> dict:
    """Parameters, Higman check and fractional bracket of a GQ(s,t) graph."""
    n = (s * t + 1) * (s + 1)
    k = s * (t + 1)
    d = 2 * s * (t + 1) - 2 * max(s, t)
    out = {"n": n, "k": k, "d": d, "higman_ok": None,
           "frac": None, "prop17_ok": None}
    if s > 1 and t > 1:
        out["higman_ok"] = t <= s * s and s <= t * t
    if claimed_transitive:
        frac = Fraction(n, min(k + 1, d))
        out["frac"] = frac
        if s > 1 and t > 1:
            num, den = frac.numerator, frac.denominator
            # 2^(-5/4) n^(1/4) <= frac <= 2 n^(2/5), compared exactly
            lower_ok = 32 * num**4 >= n * den**4
            upper_ok = num**5 <= 32 * n * n * den**5
            out["prop17_ok"] = lower_ok and upper_ok
    return out


def t2star_family_bound(q: int) -> int:
    """Printed lower bound for any GQ(q-1,q+1), strongest stated per q."""
    return {4: 3 * q - 3, 8: 3 * q - 5, 16: 3 * q - 6, 32: 3 * q - 6}.get(q, 3 * q - 7)


_FAMILY_BOUNDS = {
    "gq-t2star": ("family (discharging, GQ(q-1,q+1) cases)", t2star_family_bound),
    "gq-parabolic": ("family (discharging, GQ(q,q))", lambda q: 3 * q - 4),
    "gq-elliptic": ("family (discharging, GQ(q,q^2))", lambda q: 3 * q + 2),
    "gq-hermitian": ("family (discharging, GQ(q^2,q))", lambda q: 2 * q * q - 2),
}


@dataclass(frozen=True)
class Bound:
    name: str
    value: int | float | None
    applicable: bool
    reason: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value,
                "applicable": self.applicable, "reason": self.reason}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    k_min: int
    k_max: int
    d: int | None
    twin_free: bool
    lower_bounds: tuple[Bound, ...]
    upper_bounds: tuple[Bound, ...]
    frac_value: Fraction | None
    srg: tuple[int, int, int, int] | None
    srg_details: dict | None
    gq: tuple[int, int] | None
    gq_details: dict | None
    family: str = ""
    params: dict = field(default_factory=dict)

    def best_lower(self) -> int | None:
        vals = [b.value for b in self.lower_bounds
                if b.applicable and isinstance(b.value, int)]
        return max(vals) if vals else None

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            return v
        return {
            "n": self.n, "k_min": self.k_min, "k_max": self.k_max,
            "d": self.d, "twin_free": self.twin_free,
            "family": self.family, "params": self.params,
            "lower_bounds": [b.to_dict() for b in self.lower_bounds],
            "upper_bounds": [b.to_dict() for b in self.upper_bounds],
            "frac_value": enc(self.frac_value),
            "best_lower": self.best_lower(),
            "srg": list(self.srg) if self.srg else None,
            "srg_details": ({k: enc(v) for k, v in self.srg_details.items()}
                            if self.srg_details else None),
            "gq": list(self.gq) if self.gq else None,
            "gq_details": ({k: enc(v) for k, v in self.gq_details.items()}
                           if self.gq_details else None),
        }


def report(g: Graph) -> BoundsReport:
    """Run every applicable bound on g and collect them with provenance."""
    n = g.n
    k_min, k_max = degrees(g) if n else (0, 0)
    twin_free = not has_twins(g)
    d = min_symdiff(g) if n >= 2 else None
    has_edge = any(g.adj)

    lower: list[Bound] = []
    upper: list[Bound] = []

    ok = twin_free and has_edge
    reason = "" if ok else "needs a twin-free graph with at least one edge"
    lower.append(Bound("log2(n+1)", lb_log(n) if ok else None, ok, reason))
    upper.append(Bound("n-1", n - 1 if ok else None, ok, reason))

    lower.append(Bound("2n/(k+1)", lb_degree(n, k_max) if n else None, bool(n)))

    disc = lb_discharging(n, k_max) if n else None
    lower.append(Bound("discharging", disc, disc is not None,
                       "" if disc is not None else "needs max degree >= bound + 1"))

    frac = None
    frac_reason = ""
    try:
        frac = frac_closed_form(g)
    except Exception as e:  # noqa: BLE001 - reported, not fatal
        frac_reason = str(e)
    if frac is not None:
        lo, hi = frac_sandwich(frac, n)
        lower.append(Bound("ceil(frac)", lo, True))
        upper.append(Bound("frac*(1+2ln n)", hi, n >= 3,
                           "" if n >= 3 else "needs at least three vertices"))
    else:
        lower.append(Bound("ceil(frac)", None, False, frac_reason))
        upper.append(Bound("frac*(1+2ln n)", None, False, frac_reason))

    fam = g.meta.family
    if fam in _FAMILY_BOUNDS and "q" in g.meta.params:
        name, fn = _FAMILY_BOUNDS[fam]
        lower.append(Bound(name, fn(g.meta.params["q"]), True))

    srg = check_srg(g)
    srg_details = srg_analysis(srg) if srg else None
    gq = g.meta.claimed_gq
    gq_details = None
    if gq is not None:
        gq_details = gq_analysis(gq[0], gq[1], g.meta.claimed_vertex_transitive)

    return BoundsReport(
        n=n, k_min=k_min, k_max=k_max, d=d, twin_free=twin_free,
        lower_bounds=tuple(lower), upper_bounds=tuple(upper),
        frac_value=frac, srg=srg, srg_details=srg_details,
        gq=gq, gq_details=gq_details,
        family=fam, params=dict(g.meta.params),
    )
