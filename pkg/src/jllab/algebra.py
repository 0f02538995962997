"""Exact arithmetic over finite fields, F_q[T], and places of the rational
function field F_q(T).

Fields F_{p^m} are realized as F_p[Z]/(f) where f is the lexicographically
smallest monic irreducible of degree m (coefficients compared low-to-high as
integers).  Elements are coefficient tuples over F_p; the integer encoding
sum(c_i * p^i) gives a canonical total order used everywhere determinism
matters (root picking, orbit sorting, serialization).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# prime powers

def prime_power_decomposition(q: int):
    """Return (p, s) with q = p^s, p prime, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q and p != q:
            break
        if q % p:
            continue
        s = 0
        m = q
        while m % p == 0:
            m //= p
            s += 1
        return (p, s) if m == 1 else None
    return (q, 1)


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _moebius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


# ---------------------------------------------------------------------------
# dense polynomials over F_p as int tuples (used only for modulus search)

def _ip_trim(c):
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _ip_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ip_trim(out)


def _ip_mod(a, b, p):
    # b monic
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    while da >= db and a:
        c = a[da] % p
        if c:
            for j in range(db + 1):
                a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        da -= 1
        while da >= 0 and a[da] % p == 0 and da >= db:
            da -= 1
        a = a[: max(da + 1, 0)] if False else a
        # recompute effective degree
        a = list(_ip_trim(a)) + []
        da = len(a) - 1
    return _ip_trim(a)


def _ip_irreducible(f, p):
    """Irreducibility by trial division over F_p; f monic, deg >= 1."""
    d = len(f) - 1
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=e):
            g = tuple(tail) + (1,)
            if not _ip_mod(f, g, p):
                return False
    return True


# ---------------------------------------------------------------------------
# finite fields

class FFElement:
    """Element of a FiniteField; thin immutable wrapper over a coeff tuple."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = hash((field.p, field.m, coeffs))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, FFElement)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        self._check(other)
        return FFElement(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return FFElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return FFElement(self.field, self.field._neg(self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FFElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("division by zero field element")
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.size - 2)

    def scale(self, n: int):
        """Multiply by an integer (image of n in the prime field)."""
        n %= self.field.p
        return FFElement(self.field, tuple((c * n) % self.field.p for c in self.coeffs))

    def to_int(self) -> int:
        e = 0
        for c in reversed(self.coeffs):
            e = e * self.field.p + c
        return e

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        n = self.field.size - 1
        for ell in _prime_factors(n):
            while n % ell == 0 and self ** (n // ell) == self.field.one:
                n //= ell
        return n

    def _check(self, other):
        if not isinstance(other, FFElement) or other.field is not self.field:
            raise ValueError("field mismatch in element arithmetic")

    def __repr__(self):
        return f"ff({self.field.p}^{self.field.m}:{self.to_int()})"


class FiniteField:
    """F_{p^m}, cached per (p, m) so elements can compare by field identity."""

    _cache: dict = {}

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.size = p ** m
        if self.size > 2 ** 16:
            raise ValueError(f"field size {self.size} exceeds supported bound 2^16")
        self.modulus = self._find_modulus(p, m)
        self.zero = FFElement(self, (0,) * m)
        self.one = FFElement(self, (1,) + (0,) * (m - 1))
        self._embeddings: dict = {}
        self._mult_gen = None

    @classmethod
    def get(cls, p: int, m: int) -> "FiniteField":
        key = (p, m)
        if key not in cls._cache:
            cls._cache[key] = cls(p, m)
        return cls._cache[key]

    @classmethod
    def of_order(cls, q: int) -> "FiniteField":
        pp = prime_power_decomposition(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        return cls.get(*pp)

    @staticmethod
    def _find_modulus(p, m):
        if m == 1:
            return (0, 1)
        for tail in itertools.product(range(p), repeat=m):
            f = tuple(tail) + (1,)
            if _ip_irreducible(f, p):
                return f
        raise AssertionError("unreachable: irreducible polynomial always exists")

    # -- tuple-level arithmetic -------------------------------------------
    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        m, p = self.m, self.p
        if m == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        tail = self.modulus[:m]
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(m):
                    prod[i - m + j] -= c * tail[j]
            prod[i] = 0
        return tuple(c % p for c in prod[:m])

    # -- element constructors ---------------------------------------------
    def element(self, coeffs) -> FFElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            coeffs = (coeffs + (0,) * self.m)[: self.m]
        return FFElement(self, coeffs)

    def from_int(self, e: int) -> FFElement:
        if not 0 <= e < self.size:
            raise ValueError(f"element encoding {e} out of range for field of size {self.size}")
        coeffs = []
        for _ in range(self.m):
            coeffs.append(e % self.p)
            e //= self.p
        return FFElement(self, tuple(coeffs))

    def elements(self):
        """All field elements in canonical (integer encoding) order."""
        for e in range(self.size):
            yield self.from_int(e)

    @property
    def gen(self) -> FFElement:
        """The residue class of Z (equals 1 when m == 1)."""
        if self.m == 1:
            return self.one
        return FFElement(self, (0, 1) + (0,) * (self.m - 2))

    @property
    def multiplicative_generator(self) -> FFElement:
        if self._mult_gen is None:
            for e in self.elements():
                if e and e.multiplicative_order() == self.size - 1:
                    self._mult_gen = e
                    break
        return self._mult_gen

    def embedding_from(self, small: "FiniteField"):
        """Canonical embedding small -> self (image of gen = smallest root)."""
        if small is self:
            return lambda e: e
        if small.p != self.p or self.m % small.m:
            raise ValueError("no embedding: incompatible fields")
        if small.m not in self._embeddings:
            root = None
            for cand in self.elements():
                acc = self.zero
                for c in reversed(small.modulus):
                    acc = acc * cand + self.one.scale(c)
                if not acc:
                    root = cand
                    break
            powers = [self.one]
            for _ in range(small.m - 1):
                powers.append(powers[-1] * root)
            self._embeddings[small.m] = tuple(powers)
        powers = self._embeddings[small.m]

        def emb(e: FFElement) -> FFElement:
            acc = self.zero
            for c, rp in zip(e.coeffs, powers):
                if c:
                    acc = acc + rp.scale(c)
            return acc

        return emb

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


# ---------------------------------------------------------------------------
# polynomials over F_q in the variable T

class Poly:
    """Polynomial in F_q[T]; coeffs low-to-high with no trailing zeros.

    The zero polynomial has degree -1 (sentinel, documented rather than
    raised, so degree comparisons in Euclidean loops stay branch-free).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def T(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field, e: FFElement):
        return cls(field, (e,))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, tuple(field.from_int(int(i) % field.size) for i in ints))

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FFElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        inv = self.lead.inverse()
        return Poly(self.field, tuple(c * inv for c in self.coeffs))

    def key(self):
        """Deterministic sort key: (degree, coefficient encodings low-to-high)."""
        return (self.degree, tuple(c.to_int() for c in self.coeffs))

    def __hash__(self):
        return hash((self.field.p, self.field.m, tuple(c.coeffs for c in self.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Poly) or other.field is not self.field:
            raise ValueError("coefficient field mismatch")

    def __add__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (f.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (f.zero,) * (n - len(other.coeffs))
        return Poly(f, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if not self or not other:
            return Poly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
        return Poly(f, out)

    def __divmod__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = other.lead.inverse()
        quot = [f.zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * lead_inv
            if c:
                quot[i - db] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - db + j] = rem[i - db + j] - c * oc
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, e: FFElement) -> "Poly":
        return Poly(self.field, tuple(c * e for c in self.coeffs))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def shift(self, k: int) -> "Poly":
        """Multiply by T^k."""
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def eval(self, point: FFElement, emb=None) -> FFElement:
        """Horner evaluation; emb maps coefficients into point's field."""
        target = point.field
        acc = target.zero
        for c in reversed(self.coeffs):
            acc = acc * point + (emb(c) if emb else c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(
            self.field,
            tuple(c.scale(i) for i, c in enumerate(self.coeffs) if i >= 1),
        )

    # -- factorization -----------------------------------------------------
    def is_irreducible(self) -> bool:
        d = self.degree
        if d <= 0:
            return False
        if d == 1:
            return True
        f = self.monic()
        for e in range(1, d // 2 + 1):
            for g in _monic_polys(self.field, e):
                if not f % g:
                    return False
        return True

    def factor(self):
        """Monic irreducible factors with multiplicity, sorted canonically.

        Trial division by irreducibles of increasing degree; fine at the
        degrees that occur here (discriminants of degree <= 12).
        """
        if not self:
            raise ValueError("cannot factor the zero polynomial")
        rem = self.monic()
        out = []
        d = 1
        while rem.degree > 0:
            if d > rem.degree // 2:
                out.append((rem, 1))
                break
            for g in irreducibles_of_degree(self.field, d):
                mult = 0
                while rem.degree >= g.degree and not rem % g:
                    rem = rem // g
                    mult += 1
                if mult:
                    out.append((g, mult))
            d += 1
        return sorted(out, key=lambda fm: fm[0].key())

    # -- display -----------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            ci = c.to_int()
            if i == 0:
                terms.append(str(ci))
            else:
                var = "T" if i == 1 else f"T^{i}"
                terms.append(var if ci == 1 else f"{ci}*{var}")
        return "+".join(terms)

    def to_json(self) -> dict:
        return {
            "q": self.field.size,
            "coeffs": [c.to_int() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        field = FiniteField.of_order(int(obj["q"]))
        return cls.from_ints(field, obj["coeffs"])


def _monic_polys(field, d):
    for enc in itertools.product(range(field.size), repeat=d):
        yield Poly(
            field,
            tuple(field.from_int(e) for e in enc) + (field.one,),
        )


_IRRED_CACHE: dict = {}


def irreducibles_of_degree(field: FiniteField, d: int):
    """All monic irreducibles of degree d over F_q, canonically sorted."""
    key = (field.p, field.m, d)
    if key not in _IRRED_CACHE:
        found = [f for f in _monic_polys(field, d) if f.is_irreducible()]
        found.sort(key=lambda f: f.key())
        _IRRED_CACHE[key] = tuple(found)
    return _IRRED_CACHE[key]


def irreducible_count(q: int, d: int) -> int:
    """Necklace count (1/d) sum_{e|d} mu(e) q^(d/e)."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _moebius(e) * q ** (d // e)
    assert total % d == 0
    return total // d


def poly_from_string(field: FiniteField, s: str) -> Poly:
    """Parse 'T^2+T+1' style strings (integer-encoded coefficients)."""
    s = s.replace(" ", "").replace("-", "+-")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict = {}
    for term in s.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if "T" in term:
            head, _, tail = term.partition("T")
            c = int(head.rstrip("*")) if head else 1
            e = int(tail[1:]) if tail.startswith("^") else (1 if not tail else int(tail))
        else:
            c, e = int(term), 0
        if neg:
            c = -c
        coeffs[e] = coeffs.get(e, 0) + c
    n = max(coeffs) + 1
    ints = [coeffs.get(i, 0) % field.size for i in range(n)]
    # negative / large ints only make literal sense in the prime field
    return Poly(
        field,
        tuple(
            field.from_int(c % field.p) if field.m > 1 else field.from_int(c % field.p)
            for c in ints
        ),
    )


# ---------------------------------------------------------------------------
# places and valuations

@dataclass(frozen=True)
class Place:
    """A place of F_q(T): a monic irreducible of F_q[T], or infinity."""

    field: FiniteField
    prime: Poly | None = None  # None encodes the place at infinity

    def __post_init__(self):
        if self.prime is not None:
            if not self.prime.is_monic or not self.prime.is_irreducible():
                raise ValueError("finite place needs a monic irreducible polynomial")

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    @property
    def degree(self) -> int:
        return 1 if self.prime is None else self.prime.degree

    @property
    def residue_size(self) -> int:
        return self.field.size ** self.degree

    def __repr__(self):
        return "Place(inf)" if self.prime is None else f"Place({self.prime})"


class RationalFunction:
    """Element of F_q(T), stored reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g and g.degree > 0:
            num, den = num // g, den // g
        if den.lead != den.field.one:
            inv = den.lead.inverse()
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.field))

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return self + RationalFunction(-other.num, other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __repr__(self):
        return f"({self.num})/({self.den})" if self.den.degree > 0 else f"({self.num})"


def _finite_multiplicity(p: Poly, prime: Poly) -> int:
    if not p:
        raise ValueError("valuation of zero is undefined")
    mult = 0
    while True:
        q, r = divmod(p, prime)
        if r:
            return mult
        p = q
        mult += 1


def ord_at_place(f, v: Place) -> int:
    """Normalized valuation ord_v; ord_inf = deg(den) - deg(num)."""
    if isinstance(f, Poly):
        f = RationalFunction.from_poly(f)
    if not f.num:
        raise ValueError("valuation of zero is undefined")
    if v.is_infinite:
        return f.den.degree - f.num.degree
    return _finite_multiplicity(f.num, v.prime) - _finite_multiplicity(f.den, v.prime)


# ---------------------------------------------------------------------------
# residue rings A/n (square-free n) and their projective lines

class ResidueRing:
    """A/n for square-free monic n, split by CRT into residue fields.

    Each prime factor f of degree d contributes F_{q^d} = F_p[Z]/(g) with a
    distinguished root of f, so reduction mod f is evaluation at that root.
    """

    def __init__(self, modulus: Poly):
        if not modulus.is_monic or modulus.degree < 1:
            raise ValueError("modulus must be monic of positive degree")
        self.base = modulus.field
        self.modulus = modulus
        fac = modulus.factor()
        if any(m > 1 for _, m in fac):
            raise ValueError("modulus must be square-free")
        self.primes = tuple(f for f, _ in fac)
        p, s = self.base.p, self.base.m
        self.fields = tuple(FiniteField.get(p, s * f.degree) for f in self.primes)
        self.embeddings = tuple(F.embedding_from(self.base) for F in self.fields)
        self.roots = tuple(
            self._min_root(f, F, emb)
            for f, F, emb in zip(self.primes, self.fields, self.embeddings)
        )
        self._lift_data = None

    @staticmethod
    def _min_root(f, F, emb):
        for cand in F.elements():
            if not f.eval(cand, emb):
                return cand
        raise AssertionError("factor has no root in its residue field")

    # -- reduction ---------------------------------------------------------
    def reduce_poly(self, a: Poly):
        """Image of a in prod F_{q^d}: evaluate at the distinguished roots."""
        if a.field is not self.base:
            raise ValueError("polynomial over the wrong base field")
        return tuple(
            a.eval(r, emb) for r, emb in zip(self.roots, self.embeddings)
        )

    def lift(self, values) -> Poly:
        """The unique a with deg a < deg n and reduce_poly(a) == values.

        Inverse of the CRT split, via F_p-linear algebra on the monomial
        images (set up once per ring).
        """
        if self._lift_data is None:
            self._lift_data = self._build_lift()
        basis_cols, solve = self._lift_data
        target = []
        for F, v in zip(self.fields, values):
            if v.field is not F:
                raise ValueError("residue value in the wrong field")
            target.extend(v.coeffs)
        coeffs_fp = solve(target)
        # regroup F_p coordinates into F_q coefficients
        s = self.base.m
        n = self.modulus.degree
        out = []
        for i in range(n):
            out.append(self.base.element(tuple(coeffs_fp[i * s : (i + 1) * s])))
        return Poly(self.base, out)

    def _build_lift(self):
        p, s = self.base.p, self.base.m
        n = self.modulus.degree
        dim = n * s
        cols = []
        for i in range(n):
            for k in range(s):
                mono = Poly(self.base, (self.base.zero,) * i + (self.base.from_int(p ** k if k else 1),))
                # coefficient z^k at T^i; z^k encodes as p^k
                col = []
                for val in self.reduce_poly(mono):
                    col.extend(val.coeffs)
                cols.append(col)
        # matrix with columns cols, over F_p; invert by Gaussian elimination
        mat = [[cols[j][i] % p for j in range(dim)] for i in range(dim)]
        inv = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        for c in range(dim):
            piv = next(r for r in range(c, dim) if mat[r][c] % p)
            mat[c], mat[piv] = mat[piv], mat[c]
            inv[c], inv[piv] = inv[piv], inv[c]
            f = pow(mat[c][c], p - 2, p)
            mat[c] = [(x * f) % p for x in mat[c]]
            inv[c] = [(x * f) % p for x in inv[c]]
            for r in range(dim):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[c])]
                    inv[r] = [(x - f * y) % p for x, y in zip(inv[r], inv[c])]

        def solve(target):
            return [
                sum(inv[i][j] * target[j] for j in range(dim)) % p for i in range(dim)
            ]

        return cols, solve

    # -- projective line ---------------------------------------------------
    def normalize_pair(self, u: FFElement, v: FFElement):
        """Representative with first coordinate 1, or (0, 1)."""
        F = u.field
        if u:
            return (F.one, v / u)
        if not v:
            raise ValueError("(0, 0) does not define a projective point")
        return (F.zero, F.one)

    def point_from_polys(self, u: Poly, v: Poly):
        us = self.reduce_poly(u)
        vs = self.reduce_poly(v)
        return tuple(self.normalize_pair(a, b) for a, b in zip(us, vs))

    def projective_line(self):
        """All points of P^1(A/n) in canonical order."""
        per_factor = []
        for F in self.fields:
            pts = [(F.one, c) for c in F.elements()]
            pts.append((F.zero, F.one))
            per_factor.append(pts)
        return [tuple(combo) for combo in itertools.product(*per_factor)]

    def projective_line_size(self) -> int:
        total = 1
        for f in self.primes:
            total *= self.base.size ** f.degree + 1
        return total

    @staticmethod
    def point_key(pt):
        return tuple((a.to_int(), b.to_int()) for a, b in pt)

    def reduce_matrix(self, mat):
        """Reduce a 2x2 matrix of polynomials componentwise."""
        return tuple(
            tuple(tuple(self.reduce_poly(mat[r][c])[k] for c in range(2)) for r in range(2))
            for k in range(len(self.primes))
        )

    def act(self, reduced_mat, pt):
        """Left action on column vectors (u, v) -> (a u + b v, c u + d v)."""
        out = []
        for (mat, (u, v)) in zip(reduced_mat, pt):
            (a, b), (c, d) = mat
            out.append(self.normalize_pair(a * u + b * v, c * u + d * v))
        return tuple(out)

    def __repr__(self):
        return f"ResidueRing({self.modulus})"


def default_level_polys(q: int):
    """Default degree-1 and degree-2 monic irreducibles: T and the
    lexicographically smallest irreducible quadratic."""
    field = FiniteField.of_order(q)
    x = Poly.T(field)
    y = irreducibles_of_degree(field, 2)[0]
    return x, y
