"""Exact arithmetic in small finite fields GF(p^k).

Elements are stored packed as integers in [0, q): the base-p digits of the
packed value are the coefficients of the polynomial representation, lowest
degree first.  Multiplication, inversion and powers run off discrete-log
tables built once per field, so all operations are O(1) table lookups after
construction.
"""

from __future__ import annotations

import itertools

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    EvenCharacteristic,
    NoIrreducibleFound,
    NotPrime,
    OrderMismatch,
    SpecMismatch,
)

MAX_ORDER = 1024
MAX_DEGREE = 4


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """A concrete GF(p^k) with a fixed irreducible modulus polynomial."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus  # length k+1, monic, low degree first
        self._key = (p, k, modulus)
        self._build_tables()

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GF({self.q})"

    # -- packed-int helpers ----------------------------------------------------

    def digits(self, val: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            val, r = divmod(val, self.p)
            out.append(r)
        return tuple(out)

    def pack(self, coeffs) -> int:
        val = 0
        for c in reversed(list(coeffs)):
            val = val * self.p + (c % self.p)
        return val

    def _polymul(self, a: int, b: int) -> int:
        """Product of two packed elements, reduced mod the modulus."""
        p, k = self.p, self.k
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.modulus[j]) % p
        return self.pack(prod[:k])

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        if p == 2:
            self._add = lambda a, b: a ^ b
            self._neg = lambda a: a
        elif q <= 256:
            add_tab = [
                [self.pack(x + y for x, y in zip(self.digits(a), self.digits(b)))
                 for b in range(q)]
                for a in range(q)
            ]
            self._add = lambda a, b: add_tab[a][b]
            neg_tab = [self.pack(-x for x in self.digits(a)) for a in range(q)]
            self._neg = lambda a: neg_tab[a]
        else:
            self._add = lambda a, b: self.pack(
                x + y for x, y in zip(self.digits(a), self.digits(b)))
            self._neg = lambda a: self.pack(-x for x in self.digits(a))

        # discrete-log tables from a multiplicative generator
        factors = []
        m = q - 1
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)

        def boot_pow(a, e):
            r, base = 1, a
            while e:
                if e & 1:
                    r = self._polymul(r, base)
                base = self._polymul(base, base)
                e >>= 1
            return r

        gen = 1
        for g in range(1, q):
            if all(boot_pow(g, (q - 1) // f) != 1 for f in factors):
                gen = g
                break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._polymul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self.generator = gen
        self._exp = exp
        self._log = log

    def _sub(self, a: int, b: int) -> int:
        return self._add(a, self._neg(b))

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def _pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise DivisionByZero("0 has no negative powers")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- public element API ------------------------------------------------------

    def element(self, val: int) -> "FieldElement":
        if not 0 <= val < self.q:
            raise ValueError(f"packed value {val} outside [0, {self.q})")
        return FieldElement(self, val)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            raise ValueError("too many coefficients")
        return FieldElement(self, self.pack(coeffs + [0] * (self.k - len(coeffs))))

    def from_int(self, i: int) -> "FieldElement":
        """Embed an integer as the constant polynomial i mod p."""
        return FieldElement(self, i % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]

    def sort_key(self, a: "FieldElement") -> tuple[int, ...]:
        """Coefficient-vector order, low degree first."""
        return self.digits(a.val)


class FieldElement:
    """Immutable element of a FieldSpec; supports +, -, *, /, ** and unary -."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "val", val)

    def __setattr__(self, *args):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.val)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec._add(self.val, o.val))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec._sub(self.val, o.val))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec._sub(o.val, self.val))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec._mul(self.val, o.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec._mul(self.val, self.spec._inv(o.val)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec._pow(self.val, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._inv(self.val))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.from_int(other)
        return (isinstance(other, FieldElement)
                and self.spec == other.spec and self.val == other.val)

    def __hash__(self):
        return hash((self.spec._key, self.val))

    def __bool__(self):
        return self.val != 0

    def __str__(self):
        # debug format: comma-separated coefficients, low degree first
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"GF({self.spec.q}):{self}"


def _is_irreducible(p: int, k: int, coeffs: tuple[int, ...]) -> bool:
    """Irreducibility of the monic polynomial X^k + sum(coeffs[i] X^i) over GF(p).

    Degree <= 3 reduces iff it has a root; degree 4 additionally needs a check
    against irreducible quadratic factors.
    """
    full = list(coeffs) + [1]

    def value_at(x: int) -> int:
        acc = 0
        for c in reversed(full):
            acc = (acc * x + c) % p
        return acc

    if k == 1:
        return True
    if any(value_at(x) == 0 for x in range(p)):
        return False
    if k < 4:
        return True
    # degree 4: trial-divide by each monic quadratic with no linear factor
    for b, c in itertools.product(range(p), repeat=2):
        quad = [c, b, 1]
        if any((x * x + b * x + c) % p == 0 for x in range(p)):
            continue
        rem = list(full)
        for i in range(len(rem) - 1, 1, -1):
            f = rem[i]
            if f:
                rem[i] = 0
                rem[i - 1] = (rem[i - 1] - f * quad[1]) % p
                rem[i - 2] = (rem[i - 2] - f * quad[0]) % p
        if rem[0] == 0 and rem[1] == 0:
            return False
    return True


_spec_cache: dict[tuple[int, int], FieldSpec] = {}


def field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) with the lexicographically smallest irreducible monic modulus.

    Coefficient vectors are compared low degree first, so field(2, 2) picks
    x^2 + x + 1 and field(2, 1) picks the polynomial x.
    """
    if (p, k) in _spec_cache:
        return _spec_cache[(p, k)]
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise DegreeTooLarge(f"extension degree {k} outside [1, {MAX_DEGREE}]")
    if p**k > MAX_ORDER:
        raise DegreeTooLarge(f"field order {p**k} exceeds {MAX_ORDER}")
    for coeffs in itertools.product(range(p), repeat=k):
        if _is_irreducible(p, k, coeffs):
            spec = FieldSpec(p, k, coeffs + (1,))
            _spec_cache[(p, k)] = spec
            return spec
    raise NoIrreducibleFound(f"no irreducible monic polynomial of degree {k} over GF({p})")


def is_square(a: FieldElement) -> bool:
    """True iff a is a square in its field; requires odd field order."""
    spec = a.spec
    if spec.q % 2 == 0:
        raise EvenCharacteristic("squareness test needs odd field order")
    if a.val == 0:
        return True
    return spec._log[a.val] % 2 == 0


def conj(a: FieldElement, base_q: int) -> FieldElement:
    """The conjugate a^base_q inside GF(base_q^2); an involutory automorphism."""
    if a.spec.q != base_q * base_q:
        raise OrderMismatch(f"{a.spec} is not GF({base_q}^2)")
    return a**base_q
