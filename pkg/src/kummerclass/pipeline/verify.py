"""Check a published record against everything recomputable from d."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..galois.module import (
    admissible_exponent,
    cyclic_module_structure,
    is_module_realizable,
    is_theorem_admissible,
    module_exponent_for,
    riemann_hurwitz_holds,
    split_exponent,
)
from ..galois.structure import valuation
from ..kummer.compositum import build_sextic, compositum
from ..kummer.search import first_candidate
from ..quadratic.arith import DEFAULT_DISCRIMINANT_BOUND
from ..quadratic.hypothesis import hypothesis_check
from .records import ScanRecord


@dataclass
class Clause:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    d: int
    clauses: list[Clause] = field(default_factory=list)
    r_minus: int | None = None
    R_minus: int | None = None
    n: int | None = None
    a: int | None = None
    b: int | None = None
    admissible: bool | None = None
    realizable: bool | None = None
    rh_holds: bool | None = None
    hypothesis_v: bool | None = None
    ambiguous_only: bool | None = None

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def failing(self) -> list[Clause]:
        return [c for c in self.clauses if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.clauses.append(Clause(name, bool(ok), detail))

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        bits = [f"d={self.d}", status]
        if self.R_minus is not None:
            bits.append(f"r-={self.r_minus} R-={self.R_minus} RH={'holds' if self.rh_holds else 'fails'}")
        if self.n is not None:
            bits.append(f"n={self.n} a={self.a} b={self.b}")
        if self.admissible is not None:
            bits.append("admissible" if self.admissible else "not admissible")
        if not self.ok:
            bits.append("failing: " + ", ".join(f"{c.name} ({c.detail})" for c in self.failing()))
        return "  ".join(bits)


def _three_part_order(h: int) -> int:
    return 3 ** valuation(h, 3)


def verify_fixture(
    rec: ScanRecord,
    *,
    a_max: int = 1000,
    b_max: int = 100,
    cube_test: str = "legacy",
    bound: int = DEFAULT_DISCRIMINANT_BOUND,
) -> VerificationReport:
    if rec.class_group is None:
        raise ValueError(f"record for d={rec.d} has no class group data")
    rep = VerificationReport(rec.d)
    dossier = hypothesis_check(rec.d, with_unit=False, bound=bound)
    v = dossier.verdict

    failed = set(v.failed())
    flagged = {f.removeprefix("outside-") for f in rec.flags}
    rep.add("hypothesis-flags", failed == flagged, f"computed failures {sorted(failed)}, flagged {sorted(flagged)}")
    rep.hypothesis_v = v.cond_v
    if dossier.D_minus is None:
        return rep

    if rec.h_minus is not None:
        rep.add("h-minus", dossier.h_minus == rec.h_minus, f"{dossier.h_minus} vs {rec.h_minus}")
    if rec.h_plus is not None:
        rep.add("h-plus", dossier.h_plus == rec.h_plus, f"{dossier.h_plus} vs {rec.h_plus}")
    if rec.h_minus_3part is not None:
        got = _three_part_order(dossier.h_minus)
        rep.add("h-minus-3part", got == rec.h_minus_3part, f"{got} vs {rec.h_minus_3part}")
        if rec.h_minus is not None:
            rep.add("h-minus-statements-agree", _three_part_order(rec.h_minus) == rec.h_minus_3part,
                    f"3-part of {rec.h_minus} vs stated {rec.h_minus_3part}")
    if rec.h_plus_3part is not None:
        got = _three_part_order(dossier.h_plus)
        rep.add("h-plus-3part", got == rec.h_plus_3part, f"{got} vs {rec.h_plus_3part}")

    cand = first_candidate(rec.d, a_max, b_max, cube_test=cube_test)
    rep.add("candidate", cand is not None and (cand.a, cand.b) == (rec.a, rec.b),
            f"first hit {None if cand is None else (cand.a, cand.b)} vs {(rec.a, rec.b)}")
    own = rec.candidate
    P = compositum(build_sextic(own))
    if rec.P is not None:
        rep.add("polynomial", P == rec.P, "recomputed P differs" if P != rec.P else "")
    rep.add("constant-term", P.coeff(0) == (1 - own.T + own.N) ** 2, f"P(0)={P.coeff(0)}")
    rep.add("universal-coefficients", (P.coeff(11), P.coeff(10)) == (-6, 21))

    cg = rec.class_group
    rep.add("class-number-product", cg.order_consistent(), "order differs from product of factors")
    rep.add("three-part-statements-agree", cg.three_part_statements_agree())
    three = cg.three_part
    rep.r_minus = dossier.r_minus
    rep.R_minus = three.rank(3)
    rep.rh_holds = riemann_hurwitz_holds(rep.r_minus, rep.R_minus, 3)
    rep.ambiguous_only = three.order == 3
    rep.admissible = is_theorem_admissible(three)
    rep.realizable = is_module_realizable(three, 3)
    n = module_exponent_for(three, 3)
    if cg.order is not None:
        rep.add("three-adic-order", valuation(cg.order, 3) == n, f"v3({cg.order}) vs n={n}")

    if v.cond_v:
        rep.n = n
        rep.a, rep.b = split_exponent(3, n)
        rep.add("admissible", rep.admissible, f"3-part {three}")
        rep.add("module-structure", cyclic_module_structure(3, n) == three,
                f"R/(omega^{n}) vs {three}")
        # with r- = 1, the rank formula holds exactly when Cl_K = Cl_K^G = Z/3
        rep.add("riemann-hurwitz-vs-ambiguous", rep.rh_holds == rep.ambiguous_only)
        if rec.bucket is not None:
            rep.add("bucket", admissible_exponent(three) == rec.bucket,
                    f"a={admissible_exponent(three)} vs bucket {rec.bucket}")
    return rep


def verify_all(records, **kwargs) -> list[VerificationReport]:
    return [verify_fixture(r, **kwargs) for r in records if r.class_group is not None]
