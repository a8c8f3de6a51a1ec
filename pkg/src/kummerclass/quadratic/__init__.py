"""Imaginary and real quadratic fields: forms, class groups, units."""

from .arith import (
    DEFAULT_DISCRIMINANT_BOUND,
    discriminants,
    field_discriminant,
    is_discriminant,
    is_fundamental_discriminant,
    is_squarefree,
)
from .forms import (
    QuadraticForm,
    class_group_structure,
    class_number,
    form_cycles,
    narrow_class_number,
    reduced_forms,
    reduced_indefinite_forms,
)
from .hypothesis import FieldDossier, HypothesisVerdict, hypothesis_check
from .units import (
    FundamentalUnit,
    cube_subgroup_mod_9,
    fundamental_unit,
    is_3_primary,
    unit_group_mod_9,
)

__all__ = [
    "DEFAULT_DISCRIMINANT_BOUND",
    "FieldDossier",
    "FundamentalUnit",
    "HypothesisVerdict",
    "QuadraticForm",
    "class_group_structure",
    "class_number",
    "cube_subgroup_mod_9",
    "discriminants",
    "field_discriminant",
    "form_cycles",
    "fundamental_unit",
    "hypothesis_check",
    "is_3_primary",
    "is_discriminant",
    "is_fundamental_discriminant",
    "is_squarefree",
    "narrow_class_number",
    "reduced_forms",
    "reduced_indefinite_forms",
    "unit_group_mod_9",
]
