"""Scan records and the line-oriented fixture format.

A fixture line is a sequence of ``key=value`` fields separated by spaces::

    d=211 a=17 b=1 hm=3 h=1 P=1,-6,21,... class=27:9,3 bucket=1 source=table

``P`` lists coefficients highest degree first; ``class`` is the class number
of K followed by its cyclic factors.  Unknown keys are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path

from ..galois.structure import AbelianStructure
from ..kummer.compositum import build_sextic
from ..kummer.polynomial import IntegerPolynomial
from ..kummer.search import KummerCandidate


class FixtureFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ClassGroupData:
    """Class group of K as reported by an external system.

    ``order``/``cyclic`` follow the ``[order, [c_1, ..., c_l]]`` convention; when
    only the 3-part is known both are None and ``stated_three_part`` carries it.
    """

    order: int | None = None
    cyclic: tuple[int, ...] | None = None
    stated_three_part: AbelianStructure | None = None

    def __post_init__(self):
        if (self.order is None) != (self.cyclic is None):
            raise ValueError("order and cyclic factors go together")
        if self.order is None and self.stated_three_part is None:
            raise ValueError("no class group data")

    @property
    def structure(self) -> AbelianStructure | None:
        if self.cyclic is None:
            return None
        return AbelianStructure.from_invariants(self.cyclic)

    @property
    def three_part(self) -> AbelianStructure:
        if self.cyclic is not None:
            return self.structure.p_part(3)
        return self.stated_three_part

    def order_consistent(self) -> bool:
        if self.order is None:
            return True
        product = 1
        for c in self.cyclic:
            product *= c
        return product == self.order

    def three_part_statements_agree(self) -> bool:
        if self.cyclic is None or self.stated_three_part is None:
            return True
        return self.structure.p_part(3) == self.stated_three_part

    def bracket(self) -> str:
        if self.order is None:
            return ""
        return f"[{self.order}, [{', '.join(map(str, self.cyclic))}]]"


_BRACKET = re.compile(r"^\s*\[\s*(\d+)\s*,\s*\[\s*([\d,\s]*)\]\s*\]\s*$")


def parse_class_group(text: str) -> ClassGroupData:
    """Parse the one-line ``[order, [c_1, ..., c_l]]`` oracle output."""
    m = _BRACKET.match(text)
    if not m:
        raise FixtureFormatError(f"not a class group line: {text!r}")
    cyc = tuple(int(c) for c in m.group(2).replace(" ", "").split(",") if c)
    return ClassGroupData(int(m.group(1)), cyc)


@dataclass
class ScanRecord:
    d: int
    a: int
    b: int
    h_minus: int | None = None
    h_plus: int | None = None
    P: IntegerPolynomial | None = None
    class_group: ClassGroupData | None = None
    bucket: int | None = None
    # 3-parts only, where that is all the source states
    h_minus_3part: int | None = None
    h_plus_3part: int | None = None
    source: str = ""
    flags: tuple[str, ...] = ()
    notes: list[str] = field(default_factory=list)

    @property
    def candidate(self) -> KummerCandidate:
        return KummerCandidate.from_ab(self.d, self.a, self.b)

    @property
    def Q(self) -> IntegerPolynomial:
        return build_sextic(self.candidate)

    def key(self) -> tuple:
        """The fields a fixture line carries; used for round-trip comparisons."""
        return (
            self.d, self.a, self.b, self.h_minus, self.h_plus,
            self.P.coefficients if self.P else None,
            self.class_group, self.bucket, self.h_minus_3part, self.h_plus_3part,
            self.source, tuple(self.flags),
        )


_KEYS = ("d", "a", "b", "hm", "h", "hm3", "h3", "P", "class", "class3", "bucket", "source", "flags")


def _int_list(s: str) -> list[int]:
    return [int(x) for x in s.split(",") if x]


def parse_fixture_line(line: str) -> ScanRecord:
    fields: dict[str, str] = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or key not in _KEYS:
            raise FixtureFormatError(f"bad field {token!r}")
        if key in fields:
            raise FixtureFormatError(f"duplicate field {key!r}")
        fields[key] = value
    for required in ("d", "a", "b"):
        if required not in fields:
            raise FixtureFormatError(f"missing {required!r} in {line!r}")
    try:
        order = cyc = three = None
        if "class" in fields:
            o, sep, rest = fields["class"].partition(":")
            if not sep:
                raise FixtureFormatError(f"class needs order:factors, got {fields['class']!r}")
            order, cyc = int(o), tuple(_int_list(rest))
        if "class3" in fields:
            three = AbelianStructure(_int_list(fields["class3"]))
        cg = ClassGroupData(order, cyc, three) if (order is not None or three is not None) else None

        def opt(k):
            return int(fields[k]) if k in fields else None

        return ScanRecord(
            d=int(fields["d"]),
            a=int(fields["a"]),
            b=int(fields["b"]),
            h_minus=opt("hm"),
            h_plus=opt("h"),
            P=IntegerPolynomial.from_high(_int_list(fields["P"])) if "P" in fields else None,
            class_group=cg,
            bucket=opt("bucket"),
            h_minus_3part=opt("hm3"),
            h_plus_3part=opt("h3"),
            source=fields.get("source", ""),
            flags=tuple(f for f in fields.get("flags", "").split(",") if f),
        )
    except ValueError as exc:
        raise FixtureFormatError(f"{exc} in {line!r}") from exc


def format_fixture_line(rec: ScanRecord) -> str:
    parts = [f"d={rec.d}", f"a={rec.a}", f"b={rec.b}"]
    for key, val in (("hm", rec.h_minus), ("h", rec.h_plus), ("hm3", rec.h_minus_3part), ("h3", rec.h_plus_3part)):
        if val is not None:
            parts.append(f"{key}={val}")
    if rec.P is not None:
        parts.append("P=" + ",".join(map(str, rec.P.high_first())))
    cg = rec.class_group
    if cg is not None:
        if cg.order is not None:
            parts.append(f"class={cg.order}:" + ",".join(map(str, cg.cyclic)))
        if cg.stated_three_part is not None:
            parts.append("class3=" + ",".join(map(str, cg.stated_three_part.as_list())))
    if rec.bucket is not None:
        parts.append(f"bucket={rec.bucket}")
    if rec.source:
        parts.append(f"source={rec.source}")
    if rec.flags:
        parts.append("flags=" + ",".join(rec.flags))
    return " ".join(parts)


def read_fixtures(path: str | Path | None = None) -> list[ScanRecord]:
    """Read a fixture file; without a path, the published data shipped here."""
    if path is None:
        text = files("kummerclass.data").joinpath("fixtures.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_fixtures(text)


def parse_fixtures(text: str) -> list[ScanRecord]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(parse_fixture_line(line))
    return out


def write_fixtures(records, path: str | Path | None = None) -> str:
    text = "".join(format_fixture_line(r) + "\n" for r in sorted(records, key=lambda r: r.d))
    if path is not None:
        Path(path).write_text(text)
    return text
