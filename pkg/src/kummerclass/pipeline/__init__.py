"""Scan loop, fixture verification, reports and external oracle scripts."""

from .chevalley import chevalley_fixed_points
from .oracle import emit_oracle_script, oracle_script
from .records import (
    ClassGroupData,
    FixtureFormatError,
    ScanRecord,
    format_fixture_line,
    parse_class_group,
    parse_fixture_line,
    parse_fixtures,
    read_fixtures,
    write_fixtures,
)
from .report import format_report, parse_report
from .scan import d_values, scan, scan_one, three_exactly_divides, three_part_is
from .verify import Clause, VerificationReport, verify_all, verify_fixture

__all__ = [
    "ClassGroupData", "Clause", "FixtureFormatError", "ScanRecord", "VerificationReport",
    "chevalley_fixed_points", "d_values", "emit_oracle_script", "format_fixture_line",
    "format_report", "oracle_script", "parse_class_group", "parse_fixture_line",
    "parse_fixtures", "parse_report", "read_fixtures", "scan", "scan_one",
    "three_exactly_divides", "three_part_is", "verify_all", "verify_fixture", "write_fixtures",
]
