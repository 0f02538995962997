"""Component groups, quotient graphs and supersingular censuses for the
modular and quaternionic curves of level x*y over F_q(T)."""

__version__ = "0.1.0"

from .abgroup import AbHom, FinAbGroup, smith_normal_form
from .algebra import (
    FiniteField,
    Place,
    Poly,
    RationalFunction,
    ResidueRing,
    default_level_polys,
    irreducibles_of_degree,
    ord_at_place,
)
from .btquotient import build_quotient_graph, finite_dual_graph, genus_from_quotient
from .cuspidal import CuspidalAnalysis, cuspidal_group
from .drinfeld import DrinfeldModule, is_supersingular, supersingular_census
from .dualgraph import LengthGraph, critical_group, family_graph, family_group
from .isogeny import WeierstrassCurve, component_order_at_place, quotient_component_order
from .quaternion import component_groups, genus_ramified, mass_and_units

__all__ = [
    "AbHom",
    "CuspidalAnalysis",
    "DrinfeldModule",
    "FinAbGroup",
    "FiniteField",
    "LengthGraph",
    "Place",
    "Poly",
    "RationalFunction",
    "ResidueRing",
    "WeierstrassCurve",
    "build_quotient_graph",
    "component_groups",
    "component_order_at_place",
    "critical_group",
    "cuspidal_group",
    "default_level_polys",
    "family_graph",
    "family_group",
    "finite_dual_graph",
    "genus_from_quotient",
    "genus_ramified",
    "irreducibles_of_degree",
    "is_supersingular",
    "mass_and_units",
    "ord_at_place",
    "quotient_component_order",
    "smith_normal_form",
    "supersingular_census",
]
