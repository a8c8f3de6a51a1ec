"""Plain-text report in the layout of the published tables, with a parser."""

from __future__ import annotations

import re

from ..kummer.polynomial import IntegerPolynomial
from .records import (
    ClassGroupData,
    FixtureFormatError,
    ScanRecord,
    format_fixture_line,
    parse_class_group,
    parse_fixture_line,
)

HEADER = "# d, a, b, #Cl_{k⁻}, #Cl_{k⁺}, P, class group of K"

_HM = "#Cl_{k⁻}="
_HP = "#Cl_{k⁺}="
_D_LINE = re.compile(r"^ d=\s*(\d+)$")
_AB_LINE = re.compile(r"^a=\s*(\d+), b=\s*(\d+)(.*)$")
# fields outside the table layout ride along in fixture syntax
_META_KEYS = ("hm3", "h3", "class3", "bucket", "source", "flags")


def _meta(rec: ScanRecord) -> str:
    line = format_fixture_line(rec)
    return " ".join(t for t in line.split() if t.partition("=")[0] in _META_KEYS)


def format_row(rec: ScanRecord) -> list[str]:
    ab = f"a= {rec.a}, b= {rec.b}"
    if rec.h_minus is not None:
        ab += f", {_HM}{rec.h_minus}"
    if rec.h_plus is not None:
        ab += f", {_HP}{rec.h_plus}"
    lines = [f" d= {rec.d}", ab]
    if rec.P is not None:
        lines.append(f"P={rec.P}")
    cg = rec.class_group
    if cg is not None and cg.order is not None:
        lines.append(f"class group : {cg.bracket()}")
    meta = _meta(rec)
    if meta:
        lines.append(f"meta : {meta}")
    return lines


def format_report(records) -> str:
    out = [HEADER]
    for rec in sorted(records, key=lambda r: r.d):
        out.append("")
        out.extend(format_row(rec))
    return "\n".join(out) + "\n"


def _finish(d: int, body: list[str]) -> ScanRecord:
    if not body:
        raise FixtureFormatError(f"row d={d} has no a, b line")
    m = _AB_LINE.match(body[0])
    if not m:
        raise FixtureFormatError(f"bad a, b line {body[0]!r}")
    rec = ScanRecord(d=d, a=int(m.group(1)), b=int(m.group(2)))
    for part in (p.strip() for p in m.group(3).split(",") if p.strip()):
        if part.startswith(_HM):
            rec.h_minus = int(part[len(_HM):])
        elif part.startswith(_HP):
            rec.h_plus = int(part[len(_HP):])
        else:
            raise FixtureFormatError(f"unknown entry {part!r}")
    cg = None
    for line in body[1:]:
        if line.startswith("P="):
            rec.P = IntegerPolynomial.parse(line[2:])
        elif line.startswith("class group :"):
            cg = parse_class_group(line.partition(":")[2])
        elif line.startswith("meta :"):
            extra = parse_fixture_line(f"d={d} a={rec.a} b={rec.b} " + line.partition(":")[2])
            rec.h_minus_3part, rec.h_plus_3part = extra.h_minus_3part, extra.h_plus_3part
            rec.bucket, rec.source, rec.flags = extra.bucket, extra.source, extra.flags
            if extra.class_group is not None:
                three = extra.class_group.stated_three_part
                cg = ClassGroupData(cg.order if cg else None, cg.cyclic if cg else None, three)
        else:
            raise FixtureFormatError(f"unexpected line {line!r}")
    rec.class_group = cg
    return rec


def parse_report(text: str) -> list[ScanRecord]:
    records = []
    d = None
    body: list[str] = []
    for raw in text.splitlines():
        if not raw.strip() or raw.startswith("#"):
            continue
        m = _D_LINE.match(raw)
        if m:
            if d is not None:
                records.append(_finish(d, body))
            d, body = int(m.group(1)), []
        elif d is None:
            raise FixtureFormatError(f"line before first row: {raw!r}")
        else:
            body.append(raw.strip())
    if d is not None:
        records.append(_finish(d, body))
    return records
