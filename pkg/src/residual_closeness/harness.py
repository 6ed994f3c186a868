"""Compare the closed-form gaps against brute-force residual closeness.

Each ``(k, n)`` instance builds ``H(k, n)``, runs the exhaustive single-edge
deletion sweep, and checks ``C - R`` against :func:`delta_link` by exact
dyadic equality. Instances are independent and may be spread over a process
pool; output order is always by ``(k, n)``.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .closed_forms import FAMILIES, UncoveredRegimeError, delta_link, family_of
from .closeness import link_residual_closeness, render_fraction
from .dyadic import DyadicValue
from .graph import Edge
from .harary import harary

__all__ = [
    "SweepSpecError",
    "SweepSpec",
    "VerificationRecord",
    "VerificationSummary",
    "verify",
    "verify_pairs",
    "sweep",
    "VERIFY_COLUMNS",
    "SWEEP_COLUMNS",
    "records_to_csv",
    "records_to_json",
    "rows_to_csv",
    "sweep_rows",
    "sweep_to_json",
]

VERIFY_COLUMNS = ("k", "n", "C", "R", "delta_bf", "delta_formula", "NR", "regime", "match", "argmin_count")
SWEEP_COLUMNS = ("k", "n", "C", "R", "delta", "NR", "regime", "argmin_count")
UNCOVERED = "uncovered"


class SweepSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    ks: Sequence[int]
    n_min: int
    n_max: int
    family: Optional[str] = None
    fmt: str = "csv"
    workers: int = 1

    def __post_init__(self) -> None:
        if self.family not in (None, "all") and self.family not in FAMILIES:
            raise SweepSpecError(f"unknown family {self.family!r}; choose from all, {', '.join(FAMILIES)}")
        if self.fmt not in ("csv", "json"):
            raise SweepSpecError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise SweepSpecError("workers must be >= 1")
        if not self.ks:
            raise SweepSpecError("no k values given")
        if self.n_min > self.n_max:
            raise SweepSpecError(f"empty n range {self.n_min}:{self.n_max}")

    def instances(self) -> list[tuple[int, int]]:
        pairs = []
        for k in sorted(set(self.ks)):
            if k < 2:
                raise SweepSpecError(f"k must be >= 2, got {k}")
            for n in range(max(self.n_min, k + 1), self.n_max + 1):
                if self.family in (None, "all") or family_of(k, n) == self.family:
                    pairs.append((k, n))
        if not pairs:
            raise SweepSpecError("sweep spec selects no valid (k, n) pair")
        return pairs


@dataclass(frozen=True)
class VerificationRecord:
    k: int
    n: int
    closeness_bf: DyadicValue
    residual_bf: DyadicValue
    delta_bf: DyadicValue
    delta_formula: Optional[DyadicValue]
    regime: str
    argmin_edges: list[Edge]
    normalized: str
    match: bool

    def row(self) -> list[str]:
        return [
            str(self.k),
            str(self.n),
            self.closeness_bf.decimal(),
            self.residual_bf.decimal(),
            self.delta_bf.decimal(),
            self.delta_formula.decimal() if self.delta_formula is not None else UNCOVERED,
            self.normalized,
            self.regime,
            "true" if self.match else "false",
            str(len(self.argmin_edges)),
        ]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "C": self.closeness_bf.to_json(),
            "R": self.residual_bf.to_json(),
            "delta_bf": self.delta_bf.to_json(),
            "delta_formula": self.delta_formula.to_json() if self.delta_formula is not None else UNCOVERED,
            "NR": self.normalized,
            "regime": self.regime,
            "match": self.match,
            "argmin_edges": [list(e) for e in self.argmin_edges],
        }


@dataclass
class VerificationSummary:
    records: list[VerificationRecord] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def matched(self) -> int:
        return sum(r.match for r in self.records)

    @property
    def uncovered(self) -> int:
        return sum(r.delta_formula is None for r in self.records)

    @property
    def mismatched(self) -> int:
        return self.total - self.matched - self.uncovered

    def mismatches(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.match and r.delta_formula is not None]

    def line(self) -> str:
        return (
            f"total={self.total} matched={self.matched} "
            f"mismatched={self.mismatched} uncovered={self.uncovered}"
        )


def verify_instance(pair: tuple[int, int]) -> VerificationRecord:
    k, n = pair
    report = link_residual_closeness(harary((k, n)))
    try:
        res = delta_link(k, n)
        formula, regime = res.delta, res.source
    except UncoveredRegimeError:
        formula, regime = None, UNCOVERED
    return VerificationRecord(
        k=k,
        n=n,
        closeness_bf=report.closeness,
        residual_bf=report.residual,
        delta_bf=report.delta,
        delta_formula=formula,
        regime=regime,
        argmin_edges=report.argmin_edges,
        normalized=report.normalized_decimal,
        match=formula is not None and formula == report.delta,
    )


def verify_pairs(pairs: Iterable[tuple[int, int]], workers: int = 1) -> VerificationSummary:
    pairs = sorted(pairs)
    if workers <= 1:
        return VerificationSummary([verify_instance(p) for p in pairs])
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(pairs) // (4 * workers))
        return VerificationSummary(list(pool.map(verify_instance, pairs, chunksize=chunk)))


def verify(spec: SweepSpec) -> VerificationSummary:
    return verify_pairs(spec.instances(), spec.workers)


def sweep_rows(records: Iterable[VerificationRecord]) -> list[list[str]]:
    rows = []
    for rec in records:
        full = rec.row()
        rows.append(full[:5] + [rec.normalized, rec.regime, full[-1]])
    return rows


def sweep(spec: SweepSpec) -> list[list[str]]:
    """Tabular rows ``k, n, C, R, delta, NR, regime, argmin_count``."""
    return sweep_rows(verify(spec).records)


def _csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def records_to_csv(summary: VerificationSummary) -> str:
    return _csv(VERIFY_COLUMNS, (r.row() for r in summary.records))


def records_to_json(summary: VerificationSummary) -> str:
    doc = {
        "summary": {
            "total": summary.total,
            "matched": summary.matched,
            "mismatched": summary.mismatched,
            "uncovered": summary.uncovered,
        },
        "records": [r.to_json() for r in summary.records],
    }
    return json.dumps(doc, indent=2) + "\n"


def rows_to_csv(rows: list[list[str]]) -> str:
    return _csv(SWEEP_COLUMNS, rows)


def sweep_to_json(records: Iterable[VerificationRecord]) -> str:
    doc = [
        {
            "k": r.k,
            "n": r.n,
            "C": r.closeness_bf.to_json(),
            "R": r.residual_bf.to_json(),
            "delta": r.delta_bf.to_json(),
            "NR": r.normalized,
            "regime": r.regime,
            "argmin_count": len(r.argmin_edges),
        }
        for r in records
    ]
    return json.dumps(doc, indent=2) + "\n"
