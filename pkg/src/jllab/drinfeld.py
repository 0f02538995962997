"""Rank-2 Drinfeld modules over finite fields: skew polynomial arithmetic,
j-invariants, the supersingularity test, censuses in characteristic x and
y, and the orbit/thickness bookkeeping feeding the degenerate fibers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import FFElement, FiniteField, Poly


class SkewPoly:
    """Twisted polynomial sum a_i tau^i over a field K containing F_q,
    with the commutation rule tau * s = s^q * tau."""

    __slots__ = ("field", "q", "coeffs")

    def __init__(self, field: FiniteField, q: int, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.q = q
        self.coeffs = tuple(cs)
        qq = q
        while qq % field.p == 0:
            qq //= field.p
        if qq != 1:
            raise ValueError("twist q must be a power of the field characteristic")

    @classmethod
    def zero(cls, field, q):
        return cls(field, q, ())

    @classmethod
    def constant(cls, field, q, c: FFElement):
        return cls(field, q, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.field is other.field
            and self.q == other.q
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.q, tuple(c.coeffs for c in self.coeffs)))

    def __add__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (f.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (f.zero,) * (n - len(other.coeffs))
        return SkewPoly(f, self.q, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return SkewPoly(self.field, self.q, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """(a tau^i)(b tau^j) = a b^(q^i) tau^(i+j)."""
        self._check(other)
        f = self.field
        if not self or not other:
            return SkewPoly.zero(f, self.q)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            twist = self.q ** i
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * (b ** twist)
        return SkewPoly(f, self.q, out)

    def _check(self, other):
        if other.field is not self.field or other.q != self.q:
            raise ValueError("skew polynomial mismatch")

    def evaluate(self, v: FFElement, emb=None) -> FFElement:
        """Value of the additive polynomial sum a_i X^(q^i) at v.

        emb maps coefficients into v's field when v lives in an extension.
        """
        target = v.field
        acc = target.zero
        power = v
        for i, a in enumerate(self.coeffs):
            if i:
                power = power ** self.q
            if a:
                ae = emb(a) if emb else a
                acc = acc + ae * power
        return acc

    def __repr__(self):
        return f"SkewPoly({[c.to_int() for c in self.coeffs]})"


@dataclass(frozen=True)
class DrinfeldModule:
    """Rank-2 module over F_q[T]: phi_T = gamma + g tau + delta tau^2, with
    gamma the image of T in the coefficient field."""

    field: FiniteField       # coefficient field K
    q: int                   # size of the base constant field F_q
    gamma: FFElement
    g: FFElement
    delta: FFElement

    def __post_init__(self):
        if not self.delta:
            raise ValueError("delta must be nonzero for a rank-2 module")

    @property
    def phi_T(self) -> SkewPoly:
        return SkewPoly(self.field, self.q, (self.gamma, self.g, self.delta))

    def phi_of(self, a: Poly) -> SkewPoly:
        """Image of a(T) under the ring homomorphism T -> phi_T."""
        emb = self.field.embedding_from(a.field)
        acc = SkewPoly.zero(self.field, self.q)
        for c in reversed(a.coeffs):
            acc = acc * self.phi_T + SkewPoly.constant(self.field, self.q, emb(c))
        return acc

    def j_invariant(self) -> FFElement:
        return (self.g ** (self.q + 1)) / self.delta


def module_from_j(field: FiniteField, q: int, gamma: FFElement, j: FFElement) -> DrinfeldModule:
    """Representative with the given j-invariant: (g, delta) = (0, 1) when
    j == 0, else (1, 1/j)."""
    if not j:
        return DrinfeldModule(field, q, gamma, field.zero, field.one)
    return DrinfeldModule(field, q, gamma, field.one, j.inverse())


def is_supersingular(module: DrinfeldModule, prime: Poly) -> bool:
    """Height-two criterion: phi_p is a single term c tau^(2 deg p).

    Requires the module to live in characteristic p (gamma a root of p)."""
    d = prime.degree
    emb = module.field.embedding_from(prime.field)
    if prime.eval(module.gamma, emb):
        raise ValueError("module is not in the characteristic of the given prime")
    phi_p = module.phi_of(prime)
    cs = phi_p.coeffs
    if len(cs) != 2 * d + 1 or not cs[-1]:
        raise AssertionError("phi_p must have tau-degree exactly 2 deg p")
    if cs[0]:
        raise AssertionError("constant term of phi_p must vanish in characteristic p")
    return all(not c for c in cs[1 : 2 * d])


def supersingular_census(q: int, prime: Poly):
    """All supersingular j-invariants in characteristic `prime`, searched
    over F_{q^(2 deg p)} where they all live.  Returns the sorted list of
    integer-encoded j values."""
    d = prime.degree
    p, s = prime.field.p, prime.field.m
    K = FiniteField.get(p, s * 2 * d)
    emb = K.embedding_from(prime.field)
    gamma = None
    for cand in K.elements():
        if not prime.eval(cand, emb):
            gamma = cand
            break
    if gamma is None:
        raise AssertionError("prime has no root in F_{q^(2 deg p)}")
    found = []
    for j in K.elements():
        mod = module_from_j(K, q, gamma, j)
        if is_supersingular(mod, prime):
            found.append(j.to_int())
    return sorted(found)


def automorphism_count(module: DrinfeldModule) -> int:
    """Number of units u in the coefficient field commuting with phi_T:
    u^(q-1) = 1 when g != 0 must hold alongside u^(q^2-1) = 1."""
    K = module.field
    q = module.q
    count = 0
    for u in K.elements():
        if not u:
            continue
        if module.g and u ** (q - 1) != K.one:
            continue
        if u ** (q * q - 1) != K.one:
            continue
        count += 1
    return count


# ---------------------------------------------------------------------------
# orbit and thickness data for the degenerate fibers

@dataclass(frozen=True)
class OrbitThickness:
    prime_degree: int
    n_points: int               # crossing points of the two components
    free_orbits: int            # orbits with automorphism group F_q^*
    stacky_orbits: int          # orbits with automorphism group F_{q^2}^*
    thicknesses: tuple          # multiset of crossing-point thicknesses


def orbit_thickness_data(q: int, prime_degree: int) -> OrbitThickness:
    """Crossing-point counts and thicknesses on the degenerate fiber at a
    prime of degree 1 or 2.

    Degree 1: the q^2 + 1 lines of the two-dimensional torsion space split
    under the order-(q+1) automorphism quotient into t free orbits and s
    fixed lines with (q+1) t + s = q^2 + 1 and t + s = q + 1, giving
    t = q - 1, s = 2; fixed lines acquire thickness q + 1.
    Degree 2: all q + 1 crossing points have trivial extra automorphisms
    and thickness 1.
    """
    if prime_degree == 1:
        s = ((q + 1) * (q + 1) - (q * q + 1)) // q
        t = (q + 1) - s
        assert (q + 1) * t + s == q * q + 1 and (t, s) == (q - 1, 2)
        thick = tuple(sorted([1] * t + [q + 1] * s))
        return OrbitThickness(1, t + s, t, s, thick)
    if prime_degree == 2:
        return OrbitThickness(2, q + 1, q + 1, 0, tuple([1] * (q + 1)))
    raise ValueError("only primes of degree 1 or 2 occur at this level")


# ---------------------------------------------------------------------------
# brute-force line oracle (q = 2 only)

def line_orbit_oracle_q2():
    """Independent check of orbit_thickness_data(2, 1) by enumeration.

    Takes the supersingular module phi_T = tau^2 in characteristic T over
    F_4, computes its y-torsion (y = T^2 + T + 1) inside a splitting field,
    enumerates the q^2 + 1 = 5 torsion lines, and counts orbits under the
    automorphism group F_4^*.  Returns (free_orbits, fixed_lines).
    """
    q = 2
    base = FiniteField.get(2, 1)
    y = Poly.from_ints(base, [1, 1, 1])
    K = FiniteField.get(2, 2)       # F_4, coefficient field
    mod = DrinfeldModule(K, q, K.zero, K.zero, K.one)
    phi_y = mod.phi_of(y)

    # splitting field F_{4^ell}: smallest ell with X^(4^ell) == X mod the
    # additive polynomial (separable: its linear coefficient is 1)
    xpoly_coeffs = {}
    for i, a in enumerate(phi_y.coeffs):
        if a:
            xpoly_coeffs[q ** i] = a
    deg = max(xpoly_coeffs)
    xp = Poly(K, tuple(xpoly_coeffs.get(k, K.zero) for k in range(deg + 1)))
    X = Poly.T(K)
    r = X % xp
    ell = None
    for k in range(1, 9):
        r = (r ** 4) % xp
        if r == X:
            ell = k
            break
    if ell is None:
        raise AssertionError("torsion splitting field unexpectedly large")
    L = FiniteField.get(2, 2 * ell)
    embK = L.embedding_from(K)

    roots = [v for v in L.elements() if not phi_y.evaluate(v, embK)]
    assert len(roots) == q ** 4, "y-torsion must have q^4 points"

    def act_T(v):
        return mod.phi_T.evaluate(v, embK)

    def line_of(v):
        # A/y is a field, so every nonzero point spans a full line
        pts = set()
        for a0 in range(2):
            for a1 in range(2):
                w = L.zero
                if a0:
                    w = w + v
                if a1:
                    w = w + act_T(v)
                pts.add(w)
        return frozenset(pts)

    lines = set()
    for v in roots:
        if v:
            lines.add(line_of(v))
    assert len(lines) == q * q + 1

    # automorphisms: F_4^* acting by scaling
    omega = next(u for u in L.elements() if u and u.multiplicative_order() == 3)
    units = [L.one, omega, omega * omega]

    def scale_line(u, line):
        return frozenset(u * w for w in line)

    seen = set()
    free = fixed = 0
    for line in sorted(lines, key=lambda l: sorted(w.to_int() for w in l)):
        if line in seen:
            continue
        orbit = {scale_line(u, line) for u in units}
        seen |= orbit
        if len(orbit) == 1:
            fixed += 1
        else:
            assert len(orbit) == q + 1
            free += 1
    return free, fixed
