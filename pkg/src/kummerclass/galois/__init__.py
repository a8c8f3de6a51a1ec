"""Finite Galois-module structure for cyclic extensions of prime degree."""

from .group_ring import GroupRingElement, omega_power, sigma_minus_one_power
from .module import (
    FiltrationStep,
    ModulePresentation,
    admissible_exponent,
    closed_form_structure,
    cyclic_module_structure,
    decomposition_orders,
    element_order,
    filtration_report,
    is_module_realizable,
    is_theorem_admissible,
    riemann_hurwitz_holds,
    split_exponent,
    submodule_structure,
    subquotient_fixed_order,
)
from .snf import invariant_factors, smith_normal_form
from .structure import AbelianStructure, factor, valuation

__all__ = [
    "AbelianStructure",
    "FiltrationStep",
    "GroupRingElement",
    "ModulePresentation",
    "admissible_exponent",
    "closed_form_structure",
    "cyclic_module_structure",
    "decomposition_orders",
    "element_order",
    "factor",
    "filtration_report",
    "invariant_factors",
    "is_module_realizable",
    "is_theorem_admissible",
    "omega_power",
    "riemann_hurwitz_holds",
    "sigma_minus_one_power",
    "smith_normal_form",
    "split_exponent",
    "submodule_structure",
    "subquotient_fixed_order",
    "valuation",
]
