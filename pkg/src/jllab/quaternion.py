"""Mass formulas, class numbers, and quotient-graph shapes for Eichler
orders in the quaternion algebra over F_q(T) ramified at a finite set of
places, specialized to ramification {x, y} (degrees 1 and 2).

All intermediate arithmetic is exact rational; every formula result is
asserted integral before being returned as an int.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dualgraph import LengthGraph, critical_group


def _as_int(f: Fraction, what: str) -> int:
    if f.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {f}")
    return int(f)


def odd_indicator(degrees) -> int:
    """1 if every place in the set has odd degree, else 0 (empty set: 1)."""
    return 1 if all(d % 2 for d in degrees) else 0


def mass_and_units(q: int, ram_degrees, split_degrees=()):
    """Eichler mass formula data for ramification R (finite places, given
    by degrees) and Eichler level S (disjoint from R).

    Returns (mass, unit_term, class_number) as exact Fractions/int:
      mass = (1/(q^2-1)) prod_{v in R}(q_v - 1) prod_{w in S}(q_w + 1)
      unit_term = 2^(#R + #S - 1) Odd(R) prod_{w in S}(1 - Odd(w))
      class_number = mass + unit_term * q/(q+1)
    """
    mass = Fraction(1, q * q - 1)
    for d in ram_degrees:
        mass *= q ** d - 1
    for d in split_degrees:
        mass *= q ** d + 1
    r, s = len(ram_degrees), len(split_degrees)
    units = Fraction(2 ** (r + s - 1)) * odd_indicator(ram_degrees)
    for d in split_degrees:
        units *= 1 - odd_indicator([d])
    h = mass + units * Fraction(q, q + 1)
    return mass, units, _as_int(h, "class number")


@dataclass(frozen=True)
class GraphShape:
    n_vertices: int
    n_edges: int
    n_long_edges: int       # edges of length q + 1; the rest have length 1

    @property
    def betti(self):
        return self.n_edges - self.n_vertices + 1


def ramified_graph_data(q: int, ram_degrees, w_degree: int) -> GraphShape:
    """Vertex/edge counts of the quotient graph at a ramified place w.

    With R the ramification set and D^w the algebra ramified at R - {w}:
      V = 2 h(D^w)   (two-sided splitting of ideal classes)
      E = h^w(D^w)   (Eichler level w class number)
      long edges (length q + 1): 2^(#R-1) Odd(R - w) (1 - Odd(w)).
    """
    rest = [d for d in ram_degrees]
    rest.remove(w_degree)
    _m, _u, h_plain = mass_and_units(q, rest)
    vertices = 2 * h_plain
    _m2, _u2, edges = mass_and_units(q, rest, [w_degree])
    r = len(ram_degrees)
    long_edges = (
        2 ** (r - 1) * odd_indicator(rest) * (1 - odd_indicator([w_degree]))
    )
    return GraphShape(vertices, edges, long_edges)


def genus_ramified(q: int, ram_degrees) -> int:
    """Genus of the quotient curve for ramification R:
    g = 1 + (1/(q^2-1)) prod (q_v - 1) - (q/(q+1)) 2^(#R-1) Odd(R)."""
    prod = Fraction(1, q * q - 1)
    for d in ram_degrees:
        prod *= q ** d - 1
    r = len(ram_degrees)
    g = 1 + prod - Fraction(q, q + 1) * 2 ** (r - 1) * odd_indicator(ram_degrees)
    g = _as_int(g, "genus")
    # Euler-characteristic cross-check through the infinite-place graph
    shape = infinity_graph_data(q, ram_degrees)
    assert shape.betti == g, "genus disagrees with the infinity-graph Betti number"
    return g


def infinity_graph_data(q: int, ram_degrees) -> GraphShape:
    """Quotient graph shape at the (split) infinite place; all edges have
    length 1:
      V = (2/(q-1)) (g-1) + (q/(q-1)) 2^(#R-1) Odd(R)
      E = ((q+1)/(q-1)) (g-1) + (q/(q-1)) 2^(#R-1) Odd(R)
    with g computed from the closed genus formula (no recursion into the
    Betti cross-check)."""
    prod = Fraction(1, q * q - 1)
    for d in ram_degrees:
        prod *= q ** d - 1
    r = len(ram_degrees)
    unit = Fraction(q, q - 1) * 2 ** (r - 1) * odd_indicator(ram_degrees)
    g_frac = 1 + prod - Fraction(q, q + 1) * 2 ** (r - 1) * odd_indicator(ram_degrees)
    v = Fraction(2, q - 1) * (g_frac - 1) + unit
    e = Fraction(q + 1, q - 1) * (g_frac - 1) + unit
    return GraphShape(_as_int(v, "vertex count"), _as_int(e, "edge count"), 0)


# ---------------------------------------------------------------------------
# component groups for ramification {x, y}

def quotient_graph_at(q: int, place: str) -> LengthGraph:
    """Quotient graph of the quaternionic curve (ramification {x, y}) at
    the given place; always two vertices joined by q + 1 edges, with two
    of them long (length q + 1) at y."""
    if place == "x":
        shape = ramified_graph_data(q, [1, 2], 1)
        lengths = [1] * shape.n_edges
    elif place == "y":
        shape = ramified_graph_data(q, [1, 2], 2)
        lengths = [q + 1] * shape.n_long_edges + [1] * (
            shape.n_edges - shape.n_long_edges
        )
    elif place == "inf":
        shape = infinity_graph_data(q, [1, 2])
        lengths = [1] * shape.n_edges
    else:
        raise ValueError("place must be 'x', 'y' or 'inf'")
    if shape.n_vertices != 2:
        raise AssertionError("ramification {x, y} should give two vertices")
    return LengthGraph.build(("Z", "Zp"), [("Z", "Zp", l) for l in lengths])


def component_groups(q: int):
    """Component groups of the quaternionic quotient at x, y, infinity,
    computed as critical groups of the quotient graphs."""
    return {place: critical_group(quotient_graph_at(q, place)).group for place in ("x", "y", "inf")}
