"""Component-group bookkeeping along an isogeny, Weierstrass invariants of
elliptic curves over F_q(T), and the q = 2 identification of the kernel of
the quotient map between the two Jacobians at level x*y.

For an isogeny A -> B = A/H, the component groups at a place sit in
    0 -> H_1 -> Phi_A -> Phi_B -> H_0 -> 0
where H_1 is the part of H meeting the identity component, so
    |Phi_B| = |Phi_A| * |H_0| / |H_1|.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteField, Place, Poly, RationalFunction, ord_at_place
from .cuspidal import CuspidalAnalysis
from .quaternion import component_groups


def quotient_component_order(phi_a_order: int, h0_order: int, h1_order: int) -> int:
    """|Phi_B| from the four-term sequence; integrality is asserted."""
    num = phi_a_order * h0_order
    if num % h1_order:
        raise ArithmeticError(
            f"|Phi_A| * |H0| = {num} not divisible by |H1| = {h1_order}"
        )
    return num // h1_order


# ---------------------------------------------------------------------------
# Weierstrass invariants (universal integer formulas, valid in any
# characteristic once reduced mod p)

@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with ai in F_q[T]."""

    a1: Poly
    a2: Poly
    a3: Poly
    a4: Poly
    a6: Poly

    @property
    def field(self):
        return self.a1.field

    def invariants(self):
        """(b2, b4, b6, b8, c4, discriminant) as polynomials."""
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6

        def n(k: int) -> Poly:
            return Poly.constant(self.field, self.field.one.scale(k))

        b2 = a1 * a1 + n(4) * a2
        b4 = n(2) * a4 + a1 * a3
        b6 = a3 * a3 + n(4) * a6
        b8 = (
            a1 * a1 * a6
            + n(4) * a2 * a6
            - a1 * a3 * a4
            + a2 * a3 * a3
            - a4 * a4
        )
        c4 = b2 * b2 - n(24) * b4
        disc = -b2 * b2 * b8 - n(8) * b4 ** 3 - n(27) * b6 * b6 + n(9) * b2 * b4 * b6
        # the universal relation 4 b8 = b2 b6 - b4^2 must reduce correctly
        assert n(4) * b8 == b2 * b6 - b4 * b4
        return b2, b4, b6, b8, c4, disc

    def discriminant(self) -> Poly:
        return self.invariants()[5]

    def j_invariant(self) -> RationalFunction:
        *_rest, c4, disc = self.invariants()
        if not disc:
            raise ValueError("singular curve: discriminant vanishes")
        return RationalFunction(c4 ** 3, disc)

    def conductor_support(self):
        """Monic irreducible factors of the discriminant (the finite bad
        places for the curves handled here, which all have nonintegral j)."""
        return tuple(f for f, _m in self.discriminant().factor())


def component_order_at_place(curve: WeierstrassCurve, place: Place) -> int:
    """Order of the cyclic component group at a place of multiplicative
    reduction: -ord_v(j)."""
    n = -ord_at_place(curve.j_invariant(), place)
    if n <= 0:
        raise ValueError("curve does not have multiplicative reduction at this place")
    return n


# ---------------------------------------------------------------------------
# q = 2: optimal curves at level (T+1)(T^2+T+1) and the kernel selection

def q2_curve_table():
    """The five curves in the two isogeny classes for conductor
    (T+1)(T^2+T+1)*inf over F_2(T), with their component group orders at
    (x, y, inf) = (T+1, T^2+T+1, infinity)."""
    F = FiniteField.get(2, 1)

    def P(ints):
        return Poly.from_ints(F, ints)

    t = [0, 1]
    curves = {
        # class 1: Y^2 + T XY + Y = X^3 + a6
        "E1": (WeierstrassCurve(P(t), P([]), P([1]), P([]), P([1, 0, 0, 1])), (3, 3, 3)),
        "E1p": (
            WeierstrassCurve(P(t), P([]), P([1]), P([]), P([0, 0, 1, 0, 0, 1])),
            (9, 1, 1),
        ),
        "E1pp": (WeierstrassCurve(P(t), P([]), P([1]), P([]), P([])), (1, 1, 9)),
        # class 2: Y^2 + T XY + Y = X^3 + X^2 + a6
        "E2": (WeierstrassCurve(P(t), P([1]), P([1]), P([]), P([0, 1])), (5, 1, 5)),
        "E2p": (
            WeierstrassCurve(P(t), P([1]), P([1]), P([]), P([0, 1, 1, 0, 0, 1])),
            (1, 5, 1),
        ),
    }
    return curves


def q2_places():
    F = FiniteField.get(2, 1)
    x = Poly.from_ints(F, [1, 1])
    y = Poly.from_ints(F, [1, 1, 1])
    return Place(F, x), Place(F, y), Place(F, None)


def verify_q2_curve_table():
    """Recompute every table entry from the Weierstrass data; also check
    that the discriminants are supported exactly on {x, y}."""
    px, py, pinf = q2_places()
    report = {}
    ok = True
    for name, (curve, expected) in q2_curve_table().items():
        got = tuple(
            component_order_at_place(curve, v) for v in (px, py, pinf)
        )
        support = curve.conductor_support()
        support_ok = set(support) == {px.prime, py.prime}
        report[name] = {
            "expected": expected,
            "computed": got,
            "j": str(curve.j_invariant()),
            "support_ok": support_ok,
        }
        ok = ok and got == expected and support_ok
    return ok, report


@dataclass
class KernelCandidate:
    name: str
    order: int
    image_order_at_inf: int      # order of its image in Phi_inf


def q2_kernel_selection():
    """Select the kernel of the quotient map onto the quaternionic curve
    at q = 2.

    Phi_inf has order 15.  The three candidate kernels are H3 (order 5,
    the cuspidal subgroup generated by cy, injecting into Phi_inf),
    H1 + H3 (order 15, H1 of order 3 also injecting) and H2 + H3 (order
    15 with H2 a twisted order-3 piece specializing to 0).  Exactly one
    candidate reproduces the quaternionic component group order at
    infinity."""
    q = 2
    ca = CuspidalAnalysis(q)
    sp = ca.specialization("inf")
    phi_inf = sp.component_group
    assert phi_inf.order == 15

    C = ca.C
    cy = C.element_from_user([0, 0, 1])
    h3_img = phi_inf.element_order(sp.hom.apply(cy))
    assert h3_img == 5, "the cuspidal order-5 subgroup must inject at infinity"
    # H1: the order-3 subgroup of C (rational torsion beyond H3)
    h1_gen = C.scale(5, C.element_from_user([1, 0, 0]))
    h1_img = phi_inf.element_order(sp.hom.apply(h1_gen))
    assert h1_img == 3, "the order-3 subgroup must inject at infinity"

    candidates = [
        KernelCandidate("C0", 5, 5),
        KernelCandidate("H1+C0", 15, 15),
        # H2 is a mu_3-type subgroup: not cuspidal, specializes to 0 at
        # infinity, so only the C0 part contributes to the image
        KernelCandidate("H2+C0", 15, 5),
    ]
    target = component_groups(q)["inf"].order
    results = {}
    matches = []
    for cand in candidates:
        h1 = cand.image_order_at_inf
        h0 = cand.order // h1
        order = quotient_component_order(phi_inf.order, h0, h1)
        results[cand.name] = order
        if order == target:
            matches.append(cand.name)
    if len(matches) != 1:
        raise AssertionError(f"kernel selection not unique: {matches}")
    return {
        "phi_inf_order": phi_inf.order,
        "target_order": target,
        "candidate_orders": results,
        "selected": matches[0],
    }


# ---------------------------------------------------------------------------
# table comparison: cuspidal quotient vs quaternionic component groups

def compare_component_tables(q: int):
    """Quotient J/C0 component orders against the quaternionic ones.

    C0 = <cy> has order q^2 + 1; at each place |Phi_B| = |Phi_A| |H0|/|H1|
    with H1 the image order of C0 and H0 its kernel.  The three results
    must match the quaternionic component groups exactly."""
    ca = CuspidalAnalysis(q)
    sub = ca.cy_subgroup()
    quot = component_groups(q)
    rows = {}
    ok = True
    for place in ("x", "y", "inf"):
        sp = ca.specialization(place)
        h1 = sub["places"][place]["image_order"]
        h0 = sub["places"][place]["kernel_order"]
        predicted = quotient_component_order(sp.component_group.order, h0, h1)
        actual = quot[place].order
        rows[place] = {
            "phi_A": sp.component_group.order,
            "H0": h0,
            "H1": h1,
            "predicted_quotient": predicted,
            "quaternionic": actual,
            "match": predicted == actual,
        }
        ok = ok and predicted == actual
    return ok, rows
