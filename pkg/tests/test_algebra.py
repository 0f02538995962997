import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jllab.algebra import (
    FiniteField,
    Place,
    Poly,
    RationalFunction,
    ResidueRing,
    default_level_polys,
    irreducible_count,
    irreducibles_of_degree,
    ord_at_place,
    poly_from_string,
    prime_power_decomposition,
)

QS = (2, 3, 4, 5)


def test_prime_power_decomposition():
    assert prime_power_decomposition(2) == (2, 1)
    assert prime_power_decomposition(4) == (2, 2)
    assert prime_power_decomposition(9) == (3, 2)
    assert prime_power_decomposition(16) == (2, 4)
    assert prime_power_decomposition(6) is None
    assert prime_power_decomposition(12) is None
    assert prime_power_decomposition(1) is None


@pytest.mark.parametrize("q", QS)
def test_field_axioms_sampled(q):
    F = FiniteField.of_order(q)
    els = list(F.elements())
    assert len(els) == q
    for a in els:
        assert a + F.zero == a
        assert a * F.one == a
        assert a - a == F.zero
        if a:
            assert a * a.inverse() == F.one
            # Frobenius x -> x^p fixes exactly the prime field
            assert (a ** q) == a
    # distributivity on a sample
    rnd = random.Random(7)
    for _ in range(30):
        a, b, c = (els[rnd.randrange(q)] for _ in range(3))
        assert a * (b + c) == a * b + a * c


def test_field_modulus_is_lex_smallest():
    # lex order over low-to-high coefficient tuples:
    # F_4 = F_2[Z]/(Z^2+Z+1), F_8 uses Z^3+Z^2+1, F_9 uses Z^2+1
    assert FiniteField.get(2, 2).modulus == (1, 1, 1)
    assert FiniteField.get(2, 3).modulus == (1, 0, 1, 1)
    assert FiniteField.get(3, 2).modulus == (1, 0, 1)


def test_multiplicative_generator():
    for q in QS:
        F = FiniteField.of_order(q)
        g = F.multiplicative_generator
        assert g.multiplicative_order() == q - 1


def test_embedding_is_field_hom():
    small = FiniteField.get(2, 2)
    big = FiniteField.get(2, 4)
    emb = big.embedding_from(small)
    for a in small.elements():
        for b in small.elements():
            assert emb(a) + emb(b) == emb(a + b)
            assert emb(a) * emb(b) == emb(a * b)
    images = {emb(a) for a in small.elements()}
    assert len(images) == 4


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("d", (1, 2, 3, 4))
def test_irreducible_counts_match_necklace_formula(q, d):
    F = FiniteField.of_order(q)
    assert len(irreducibles_of_degree(F, d)) == irreducible_count(q, d)


def test_poly_divmod_property():
    F = FiniteField.get(3, 1)
    rnd = random.Random(11)
    for _ in range(200):
        a = Poly.from_ints(F, [rnd.randrange(3) for _ in range(rnd.randint(0, 7))])
        b = Poly.from_ints(F, [rnd.randrange(3) for _ in range(rnd.randint(1, 5))])
        if not b:
            continue
        qq, r = divmod(a, b)
        assert qq * b + r == a
        assert r.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(0, 1), min_size=0, max_size=8),
    st.lists(st.integers(0, 1), min_size=0, max_size=8),
)
def test_gcd_divides_both(a_ints, b_ints):
    F = FiniteField.get(2, 1)
    a = Poly.from_ints(F, a_ints)
    b = Poly.from_ints(F, b_ints)
    if not a and not b:
        return
    g = a.gcd(b) if a else b.monic()
    if a:
        assert not a % g
    if b:
        assert not b % g


def test_factor_recombines():
    F = FiniteField.get(2, 1)
    p = Poly.from_ints(F, [1, 1]) ** 9 * Poly.from_ints(F, [1, 1, 1])
    fac = p.factor()
    prod = Poly.one(F)
    for f, m in fac:
        assert f.is_irreducible()
        prod = prod * f ** m
    assert prod == p.monic()


def test_default_level_polys():
    for q in QS:
        x, y = default_level_polys(q)
        assert x.degree == 1 and y.degree == 2
        assert x.is_irreducible() and y.is_irreducible()
    F = FiniteField.get(2, 1)
    assert default_level_polys(2)[1] == Poly.from_ints(F, [1, 1, 1])


def test_poly_from_string():
    F = FiniteField.get(2, 1)
    assert poly_from_string(F, "T^2+T+1") == Poly.from_ints(F, [1, 1, 1])
    assert poly_from_string(F, "T") == Poly.T(F)
    F3 = FiniteField.get(3, 1)
    assert poly_from_string(F3, "T^2+1") == Poly.from_ints(F3, [1, 0, 1])
    assert poly_from_string(F3, "2*T+2") == Poly.from_ints(F3, [2, 2])


# ---------------------------------------------------------------------------
# valuations

def test_ord_infinity():
    F = FiniteField.get(2, 1)
    num = Poly.T(F) ** 12
    den = Poly.from_ints(F, [1, 0, 0, 1])
    f = RationalFunction(num, den)
    assert ord_at_place(f, Place(F, None)) == -9


def test_ord_finite():
    F = FiniteField.get(2, 1)
    x = Poly.from_ints(F, [1, 1])
    f = RationalFunction(x ** 3, Poly.one(F))
    assert ord_at_place(f, Place(F, x)) == 3
    g = RationalFunction(Poly.one(F), x ** 2)
    assert ord_at_place(g, Place(F, x)) == -2


def test_ord_is_additive():
    F = FiniteField.get(3, 1)
    x = Poly.T(F)
    y = irreducibles_of_degree(F, 2)[0]
    places = [Place(F, x), Place(F, y), Place(F, None)]
    rnd = random.Random(5)
    for _ in range(40):
        a = Poly.from_ints(F, [rnd.randrange(3) for _ in range(rnd.randint(1, 6))])
        b = Poly.from_ints(F, [rnd.randrange(3) for _ in range(rnd.randint(1, 6))])
        if not a or not b:
            continue
        fa, fb = RationalFunction.from_poly(a), RationalFunction.from_poly(b)
        for v in places:
            assert ord_at_place(fa * fb, v) == ord_at_place(fa, v) + ord_at_place(fb, v)


def test_degree_sum_of_valuations_vanishes():
    # sum over all places of deg(v) * ord_v(f) == 0, checked for polynomials
    # (the infinite place balances the finite factorization)
    F = FiniteField.get(2, 1)
    rnd = random.Random(3)
    for _ in range(25):
        a = Poly.from_ints(F, [rnd.randrange(2) for _ in range(6)] + [1])
        total = -a.degree  # contribution of infinity: ord_inf * deg_inf
        for f, m in a.factor():
            total += m * f.degree
        assert total == 0


# ---------------------------------------------------------------------------
# residue rings and the projective line

@pytest.mark.parametrize("q", QS)
def test_projective_line_size(q):
    x, y = default_level_polys(q)
    ring = ResidueRing(x * y)
    pts = ring.projective_line()
    assert len(pts) == (q + 1) * (q * q + 1) == ring.projective_line_size()
    assert len(set(pts)) == len(pts)


def test_projective_line_sizes_various_levels():
    for q in (2, 3):
        F = FiniteField.of_order(q)
        for n in [
            Poly.T(F),
            irreducibles_of_degree(F, 2)[0],
            Poly.T(F) * irreducibles_of_degree(F, 3)[0],
        ]:
            ring = ResidueRing(n)
            expect = 1
            for f in ring.primes:
                expect *= q ** f.degree + 1
            assert len(ring.projective_line()) == expect


def test_residue_ring_rejects_non_squarefree():
    F = FiniteField.get(2, 1)
    with pytest.raises(ValueError):
        ResidueRing(Poly.T(F) ** 2)


@pytest.mark.parametrize("q", QS)
def test_crt_split_lift_roundtrip(q):
    x, y = default_level_polys(q)
    ring = ResidueRing(x * y)
    n = x * y
    rnd = random.Random(13)
    for _ in range(20):
        a = Poly.from_ints(ring.base, [rnd.randrange(q) for _ in range(n.degree)])
        assert ring.lift(ring.reduce_poly(a)) == a
    # multiplicativity of the splitting
    for _ in range(20):
        a = Poly.from_ints(ring.base, [rnd.randrange(q) for _ in range(5)])
        b = Poly.from_ints(ring.base, [rnd.randrange(q) for _ in range(5)])
        ab = ring.reduce_poly(a * b)
        assert ab == tuple(u * v for u, v in zip(ring.reduce_poly(a), ring.reduce_poly(b)))


def test_point_normalization():
    q = 3
    x, y = default_level_polys(q)
    ring = ResidueRing(x * y)
    for pt in ring.projective_line():
        for u, v in pt:
            assert (u == u.field.one) or (u == u.field.zero and v == v.field.one)


def test_action_is_projective():
    # scalar matrices act trivially
    q = 3
    x, y = default_level_polys(q)
    ring = ResidueRing(x * y)
    F = ring.base
    c = Poly.constant(F, F.multiplicative_generator)
    z = Poly.zero(F)
    scalar = ring.reduce_matrix(((c, z), (z, c)))
    for pt in ring.projective_line():
        assert ring.act(scalar, pt) == pt
