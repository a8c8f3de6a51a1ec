"""Arithmetic conditions on the pair k- = Q(sqrt(-d)), k+ = Q(sqrt(3d))."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..galois.structure import AbelianStructure, valuation
from .arith import DEFAULT_DISCRIMINANT_BOUND, discriminants, is_squarefree
from .forms import class_group_structure, class_number
from .units import FundamentalUnit, fundamental_unit, is_3_primary


@dataclass(frozen=True)
class HypothesisVerdict:
    """Per-condition outcome.

    ``cond_iii`` and ``cond_iv`` concern the choice of the Kummer generator;
    they stay ``None`` until a candidate is attached.
    """

    cond_i: bool
    cond_ii: bool
    cond_v: bool
    cond_iii: bool | None = None
    cond_iv: bool | None = None

    @property
    def arithmetic_ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_v

    @property
    def all_ok(self) -> bool:
        return self.arithmetic_ok and bool(self.cond_iii) and bool(self.cond_iv)

    def failed(self) -> list[str]:
        names = {"cond_i": "i", "cond_ii": "ii", "cond_iii": "iii", "cond_iv": "iv", "cond_v": "v"}
        return [label for attr, label in names.items() if getattr(self, attr) is False]


@dataclass(frozen=True)
class FieldDossier:
    d: int
    D_minus: int | None
    D_plus: int | None
    h_minus: int | None
    h_plus: int | None
    cl_minus_structure: AbelianStructure | None
    eps: FundamentalUnit | None
    eps_3_primary: bool | None
    verdict: HypothesisVerdict

    @property
    def r_minus(self) -> int | None:
        """3-rank of the class group of k-."""
        if self.cl_minus_structure is None:
            return None
        return self.cl_minus_structure.rank(3)

    def with_construction(self, iii: bool, iv: bool) -> FieldDossier:
        return replace(self, verdict=replace(self.verdict, cond_iii=iii, cond_iv=iv))


def _exactly_three(h: int) -> bool:
    return valuation(h, 3) == 1


def hypothesis_check(
    d: int,
    *,
    with_unit: bool = True,
    with_structure: bool = True,
    bound: int = DEFAULT_DISCRIMINANT_BOUND,
) -> FieldDossier:
    cond_i = d >= 1 and is_squarefree(d) and d % 3 != 0
    cond_ii = d % 3 == 1
    if not cond_i:
        verdict = HypothesisVerdict(False, cond_ii, False)
        return FieldDossier(d, None, None, None, None, None, None, None, verdict)
    D_minus, D_plus = discriminants(d)
    h_minus = class_number(D_minus, bound)
    h_plus = class_number(D_plus, bound)
    cond_v = h_plus % 3 != 0 and _exactly_three(h_minus)
    structure = class_group_structure(D_minus, bound) if with_structure else None
    eps = primary = None
    if with_unit:
        eps = fundamental_unit(D_plus)
        primary = is_3_primary(eps, D_plus)
    verdict = HypothesisVerdict(cond_i, cond_ii, cond_v)
    return FieldDossier(d, D_minus, D_plus, h_minus, h_plus, structure, eps, primary, verdict)
