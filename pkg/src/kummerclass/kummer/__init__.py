"""Kummer generators and the polynomials defining the degree-12 fields."""

from .compositum import (
    DegenerateCompositum,
    PlausibilityReport,
    build_sextic,
    compositum,
    plausibility_check,
    sextic_is_irreducible,
    sextic_parameters,
)
from .polynomial import IntegerPolynomial, factor_degrees_mod, resultant
from .search import (
    KummerCandidate,
    first_candidate,
    icbrt,
    legacy_cube_test,
    search_alpha,
)

__all__ = [
    "DegenerateCompositum",
    "IntegerPolynomial",
    "KummerCandidate",
    "PlausibilityReport",
    "build_sextic",
    "compositum",
    "factor_degrees_mod",
    "first_candidate",
    "icbrt",
    "legacy_cube_test",
    "plausibility_check",
    "resultant",
    "search_alpha",
    "sextic_is_irreducible",
    "sextic_parameters",
]
