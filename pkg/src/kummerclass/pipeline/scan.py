"""The search loop over d = 1 (mod 3)."""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from ..galois.structure import AbelianStructure
from ..kummer.compositum import (
    DegenerateCompositum,
    build_sextic,
    compositum,
    plausibility_check,
    sextic_is_irreducible,
)
from ..kummer.search import search_alpha
from ..quadratic.arith import DEFAULT_DISCRIMINANT_BOUND
from ..quadratic.hypothesis import hypothesis_check
from .records import ClassGroupData, ScanRecord

log = logging.getLogger(__name__)

StructureFilter = Callable[[ClassGroupData], bool]


def three_exactly_divides(cg: ClassGroupData) -> bool:
    """3 divides the class number exactly once."""
    return cg.three_part.order == 3


def three_part_is(target) -> StructureFilter:
    """Filter on the 3-part of Cl(K), e.g. ``three_part_is([9, 3])``."""
    want = AbelianStructure(target)
    return lambda cg: cg.three_part == want


def d_values(d_lo: int, d_hi: int) -> range:
    """d = 1 (mod 3) in ``[d_lo, d_hi]``, i.e. the sequence 4, 7, 10, ... clipped."""
    start = max(d_lo, 1)
    start += (1 - start) % 3
    return range(start, d_hi + 1, 3)


def scan_one(
    d: int,
    a_max: int = 1000,
    b_max: int = 100,
    *,
    cube_test: str = "legacy",
    require_hypothesis: bool = True,
    bound: int = DEFAULT_DISCRIMINANT_BOUND,
) -> ScanRecord | None:
    """Record for a single d, or None when d is rejected or has no candidate."""
    dossier = hypothesis_check(d, with_unit=False, with_structure=False, bound=bound)
    if not dossier.verdict.cond_i:
        return None
    if require_hypothesis and not dossier.verdict.arithmetic_ok:
        return None
    notes = []
    for cand in search_alpha(d, a_max, b_max, cube_test=cube_test):
        Q = build_sextic(cand)
        if not sextic_is_irreducible(Q):
            notes.append(f"(a,b)=({cand.a},{cand.b}) skipped: alpha is a cube")
            continue
        try:
            P = compositum(Q)
        except DegenerateCompositum as exc:
            notes.append(f"(a,b)=({cand.a},{cand.b}) skipped: {exc}")
            continue
        report = plausibility_check(P)
        notes.extend(f"plausibility: {f}" for f in report.failures())
        return ScanRecord(
            d=d, a=cand.a, b=cand.b, h_minus=dossier.h_minus, h_plus=dossier.h_plus,
            P=P, notes=notes,
        )
    log.info("d=%d: no Kummer candidate in the box a<=%d, b<=%d", d, a_max, b_max)
    return None


def scan(
    d_lo: int,
    d_hi: int,
    a_max: int = 1000,
    b_max: int = 100,
    structure_filter: StructureFilter | None = None,
    *,
    class_groups: Mapping[int, ClassGroupData] | None = None,
    cube_test: str = "legacy",
    bound: int = DEFAULT_DISCRIMINANT_BOUND,
    workers: int = 1,
) -> list[ScanRecord]:
    """Run the search over ``d in [d_lo, d_hi]``, d = 1 (mod 3), in increasing order.

    ``class_groups`` attaches externally computed class groups of K; the
    structure filter only drops records whose class group is known.
    """
    ds = list(d_values(d_lo, d_hi))
    work = partial(scan_one, a_max=a_max, b_max=b_max, cube_test=cube_test, bound=bound)
    if workers > 1 and len(ds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, ds, chunksize=max(1, len(ds) // (4 * workers))))
    else:
        results = [work(d) for d in ds]
    records = []
    for rec in results:
        if rec is None:
            continue
        cg = (class_groups or {}).get(rec.d)
        if cg is not None:
            rec.class_group = cg
            if structure_filter is not None and not structure_filter(cg):
                continue
        records.append(rec)
    return records
