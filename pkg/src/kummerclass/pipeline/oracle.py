"""GP scripts for the degree-12 class group computation, run outside this package."""

from __future__ import annotations

from pathlib import Path

from .records import ScanRecord


def oracle_script(rec: ScanRecord) -> str:
    if rec.P is None:
        raise ValueError(f"record for d={rec.d} has no polynomial")
    lines = [
        f"\\\\ class group of K for d={rec.d}, alpha={rec.candidate.alpha_str()}",
        "\\\\ output: [order, [c_1, ..., c_l]] on one line",
        f"P = {rec.P};",
        "bnf = bnfinit(P, 1);",
        "H = bnrinit(bnf, 1);",
        "print([H.no, H.cyc]);",
        "quit;",
    ]
    return "\n".join(lines) + "\n"


def emit_oracle_script(rec: ScanRecord, path: str | Path | None = None) -> str:
    """Render the script and, given a path, write it there."""
    text = oracle_script(rec)
    if path is not None:
        Path(path).write_text(text)
    return text
