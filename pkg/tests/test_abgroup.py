import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jllab.abgroup import (
    AbHom,
    FinAbGroup,
    coprimality_pair,
    determinant,
    express_in_basis,
    lattice_basis,
    left_kernel_basis,
    mat_mul,
    smith_normal_form,
)


def _random_matrix(rnd, rows, cols, bound=9):
    return [[rnd.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def test_snf_identities_on_random_matrices():
    rnd = random.Random(2024)
    for _ in range(500):
        r = rnd.randint(1, 5)
        c = rnd.randint(1, 5)
        m = _random_matrix(rnd, r, c)
        res = smith_normal_form(m)
        assert mat_mul(mat_mul(res.U, m), res.V) == res.D
        # D is diagonal with divisibility chain
        diag = res.diagonal
        for i, row in enumerate(res.D):
            for j, e in enumerate(row):
                if i != j:
                    assert e == 0
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0
        assert all(d >= 0 for d in diag)
        # tracked inverses really invert
        assert mat_mul(res.U, res.Uinv) == [
            [1 if i == j else 0 for j in range(r)] for i in range(r)
        ]
        assert mat_mul(res.V, res.Vinv) == [
            [1 if i == j else 0 for j in range(c)] for i in range(c)
        ]


def test_snf_preserves_determinant_up_to_sign():
    rnd = random.Random(5)
    for _ in range(100):
        n = rnd.randint(1, 4)
        m = _random_matrix(rnd, n, n)
        res = smith_normal_form(m)
        prod = 1
        for d in res.diagonal:
            prod *= d
        assert prod == abs(determinant(m))


def test_determinant_bareiss_vs_known():
    assert determinant([[2]]) == 2
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1, 2], [1, 0, 3], [4, -3, 8]]) == -2
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30


def test_left_kernel():
    m = [[1, 2], [2, 4], [3, 6]]
    ker = left_kernel_basis(m)
    assert len(ker) == 2
    for v in ker:
        assert all(sum(v[i] * m[i][j] for i in range(3)) == 0 for j in range(2))


def test_express_in_basis():
    basis = [[2, 0, 1], [0, 3, 1]]
    coords = express_in_basis(basis, [4, 3, 3])
    assert coords == [Fraction(2), Fraction(1)]
    with pytest.raises(ValueError):
        express_in_basis(basis, [1, 1, 1])


def test_lattice_basis_spans_same_lattice():
    rows = [[2, 4], [6, 8], [0, 2]]
    basis = lattice_basis(rows, 2)
    for r in rows:
        coords = express_in_basis(basis, r)
        assert all(c.denominator == 1 for c in coords)


# ---------------------------------------------------------------------------
# finite abelian groups

def test_group_from_relations_known_structures():
    # Z/6 presented redundantly
    g = FinAbGroup.from_relations(2, [[2, 0], [0, 3], [2, 3]])
    assert g.order == 6
    assert g.invariant_factors == (6,)
    # free group: no relations
    g = FinAbGroup.from_relations(2, [])
    assert g.rank == 2
    assert g.invariant_factors == ()
    # trivial
    assert FinAbGroup.trivial().order == 1


def test_group_structure_string():
    g = FinAbGroup.from_factors([2, 20])
    assert g.invariant_factors == (2, 20)
    assert "Z/2" in g.structure_string() and "Z/20" in g.structure_string()
    assert FinAbGroup.trivial().structure_string() == "0"


def test_element_arithmetic_and_orders():
    g = FinAbGroup.from_factors([4, 12])
    a = g.element_from_user([1, 0])
    b = g.element_from_user([0, 1])
    assert g.element_order(a) == 4
    assert g.element_order(b) == 12
    assert g.element_order(g.add(a, b)) == 12
    assert g.reduce(g.scale(4, a)) == g.zero
    assert g.add(a, g.neg(a)) == g.zero


def test_elements_enumeration():
    g = FinAbGroup.from_factors([2, 6])
    els = list(g.elements())
    assert len(els) == 12
    assert len(set(els)) == 12


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=0, max_size=5))
def test_group_order_matches_snf(rows):
    g = FinAbGroup.from_relations(3, rows)
    res = smith_normal_form(rows) if rows else None
    if g.rank == 0:
        assert g.order == math.prod(g.invariant_factors)


# ---------------------------------------------------------------------------
# homomorphisms

def test_hom_rejects_ill_defined_images():
    src = FinAbGroup.from_factors([5])
    dst = FinAbGroup.from_factors([15])
    # 5 * 10 = 50 != 0 in Z/15, so c -> 10 is not a hom from Z/5
    with pytest.raises(ValueError):
        AbHom(src, dst, [[10]])
    AbHom(src, dst, [[3]])  # 5 * 3 = 15 = 0: fine


def test_hom_kernel_image_cokernel_cyclic():
    src = FinAbGroup.from_factors([12])
    dst = FinAbGroup.from_factors([12])
    phi = AbHom(src, dst, [[4]])  # x -> 4x
    k, i, c = phi.kernel_image_cokernel()
    assert k.invariant_factors == (4,)
    assert i.invariant_factors == (3,)
    assert c.invariant_factors == (4,)
    assert k.order * i.order == src.order
    assert i.order * c.order == dst.order


def test_hom_zero_and_identity():
    g = FinAbGroup.from_factors([2, 6])
    ident = AbHom(g, g, [[1, 0], [0, 1]])
    k, i, c = ident.kernel_image_cokernel()
    assert k.order == 1 and c.order == 1 and i.order == g.order
    zero = AbHom(g, g, [[0, 0], [0, 0]])
    k, i, c = zero.kernel_image_cokernel()
    assert k.order == g.order and i.order == 1 and c.order == g.order


def test_hom_random_rank_nullity():
    rnd = random.Random(77)
    for _ in range(40):
        d1 = rnd.choice([2, 3, 4, 6])
        d2 = rnd.choice([4, 6, 9])
        src = FinAbGroup.from_factors([d1, d1 * rnd.choice([1, 2, 3])])
        dst = FinAbGroup.from_factors([d2, d2 * rnd.choice([1, 2, 5])])
        images = []
        for d in src.invariant_factors:
            while True:
                img = [rnd.randrange(f) for f in dst.invariant_factors]
                cand = dst.reduce(dst.scale(d, img))
                if cand == dst.zero:
                    images.append(img)
                    break
        phi = AbHom(src, dst, images)
        k, i, c = phi.kernel_image_cokernel()
        assert k.order * i.order == src.order
        assert i.order * c.order == dst.order


# ---------------------------------------------------------------------------
# gcd lemma

def test_coprimality_pair_small():
    # gcd(n^2+1, n+1) is 2 for odd n and 1 for even n
    for n in range(1, 10 ** 4 + 1):
        g = coprimality_pair(n)
        assert g == (2 if n % 2 else 1)
        assert g == math.gcd(n * n + 1, n + 1)
