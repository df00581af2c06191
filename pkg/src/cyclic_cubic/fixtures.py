"""Tabulated examples for n2 = 2, 3, 5, 7, 11 and their verification."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional

from .arith import parse_factored
from .classify import classify
from .errors import CubicError, VerificationError
from .cubic_field import new_field
from .galois_module import verify_structure
from .integral_basis import integral_basis
from .report import TABLE_COLUMNS, run, table_row


@dataclass(frozen=True)
class FixtureRow:
    n1: int
    n2: int
    DL: str
    case: str
    delta: str
    a0: int
    a1: int
    alpha_c: Fraction
    alpha_rho: Fraction
    alpha_rhoprime: Fraction
    raw: dict = field(compare=False, repr=False, default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "FixtureRow":
        missing = [k for k in TABLE_COLUMNS if k not in d]
        if missing:
            raise ValueError(f"missing columns: {', '.join(missing)}")
        return cls(int(d["n1"]), int(d["n2"]), d["DL"], d["case"], d["delta"],
                   int(d["a0"]), int(d["a1"]), Fraction(d["alpha_c"]),
                   Fraction(d["alpha_rho"]), Fraction(d["alpha_rhoprime"]),
                   {k: d[k].strip() for k in TABLE_COLUMNS})


def read_fixtures(text: str) -> list[FixtureRow]:
    rows = []
    for i, d in enumerate(csv.DictReader(io.StringIO(text)), start=1):
        try:
            rows.append(FixtureRow.from_dict(d))
        except (ValueError, TypeError, ZeroDivisionError, AttributeError) as exc:
            raise ValueError(f"row {i}: unreadable fixture ({exc})") from None
    return rows


def embedded_text() -> str:
    return resources.files(__package__).joinpath("data/tables.csv").read_text(encoding="utf-8")


def load_fixtures(path: Optional[str] = None) -> list[FixtureRow]:
    if path is None:
        return read_fixtures(embedded_text())
    with open(path, encoding="utf-8") as fh:
        return read_fixtures(fh.read())


@dataclass
class RowResult:
    index: int
    row: FixtureRow
    diffs: list[str]

    @property
    def ok(self) -> bool:
        return not self.diffs

    @property
    def label(self) -> str:
        return f"row {self.index} ({self.row.raw.get('n1', self.row.n1)},{self.row.raw.get('n2', self.row.n2)})"


def check_row(index: int, row: FixtureRow) -> RowResult:
    """Recompute a row and compare every field; also certify the row's own alpha."""
    diffs = []
    try:
        p = run(row.n1, row.n2)
    except CubicError as exc:
        return RowResult(index, row, [f"parameter: {exc}"])
    got = table_row(p)
    if (p.inv.n1, p.inv.n2) != (row.n1, row.n2):
        diffs.append(f"parameter: ({row.n1},{row.n2}) is not in lowest terms")
    for k in TABLE_COLUMNS:
        if got[k] != row.raw[k]:
            diffs.append(f"{k}: expected {row.raw[k]} got {got[k]}")
    # the printed factorizations must also denote the recomputed integers
    for k, value in (("DL", p.inv.discriminant), ("delta", p.inv.delta)):
        try:
            ok = parse_factored(row.raw[k]) == value
        except ValueError:
            ok = False
        if not ok:
            diffs.append(f"{k}: {row.raw[k]} does not equal {value}")
    alpha = p.inv.field.from_rho_basis(row.alpha_c, row.alpha_rho, row.alpha_rhoprime)
    try:
        verify_structure(p.inv, alpha, p.ib)
    except VerificationError as exc:
        diffs.append(f"tabulated alpha fails {exc.check}: {exc}")
    return RowResult(index, row, diffs)


def verify_rows(rows: list[FixtureRow]) -> list[RowResult]:
    return [check_row(i, r) for i, r in enumerate(rows, start=1)]


def certify_alpha(row: FixtureRow) -> None:
    """Raise VerificationError unless the row's alpha has the claimed structure."""
    inv = classify(new_field(row.n1, row.n2))
    alpha = inv.field.from_rho_basis(row.alpha_c, row.alpha_rho, row.alpha_rhoprime)
    verify_structure(inv, alpha, integral_basis(inv))
