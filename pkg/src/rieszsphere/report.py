"""Validation of energy tables against necessary conditions on true minima.

A table of putatively minimal energies v(N) at one s must

* increase strictly in N,
* increase strictly in s at fixed N (checked across companion tables),
* for s < 0, keep every second difference inside the two-sided bound
  computed from v(N) alone.

Rows failing any of these are flagged; tables labelled as digital nets are
flagged the same way but their flags are not counted as data errors. The
convexity sets and a comparison with the embedded catalog are reported
alongside; catalog disagreement is informational only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .asymptotics import ddv_bounds_prop1
from .concavity import (CATALOG_RANGE, ConvexityReport, MagicCatalog, convexity_sets,
                        monotonicity_check_N, monotonicity_check_s)
from .constants import A_LOG, B_LOG, C_2, C_LOG, C_LOG_EXPANSION, W_LOG
from .nets import NET_LABEL
from .tables import EnergyTable


@dataclass(frozen=True)
class ContinuumConstants:
    w_log: float = W_LOG
    c_log: float = C_LOG
    c_2: float = C_2
    log_expansion: tuple[float, float, float] = (A_LOG, B_LOG, C_LOG_EXPANSION)


@dataclass(frozen=True)
class EmbeddedCatalog:
    corrected: MagicCatalog
    pre_correction: MagicCatalog
    constants: ContinuumConstants


def embedded_catalog() -> EmbeddedCatalog:
    """The compiled-in convexity sets (both variants) and continuum constants."""
    return EmbeddedCatalog(MagicCatalog(True), MagicCatalog(False), ContinuumConstants())


@dataclass
class CatalogComparison:
    s: int
    agree: set[int]
    only_table: set[int]
    only_catalog: set[int]


@dataclass
class TableReport:
    s: float
    label: str
    flags: dict[int, list[str]] = field(default_factory=dict)
    convexity: ConvexityReport | None = None
    catalog: CatalogComparison | None = None

    def flag(self, n: int, reason: str) -> None:
        self.flags.setdefault(n, []).append(reason)

    def verdict(self, n: int) -> str:
        reasons = self.flags.get(n)
        return f"flagged({'; '.join(reasons)})" if reasons else "consistent"

    @property
    def is_net(self) -> bool:
        return self.label == NET_LABEL

    @property
    def consistent(self) -> bool:
        """True only if no row is flagged."""
        return not self.flags

    @property
    def data_errors(self) -> bool:
        return bool(self.flags) and not self.is_net


@dataclass
class ValidationReport:
    tables: list[TableReport]

    @property
    def consistent(self) -> bool:
        return all(t.consistent for t in self.tables)

    @property
    def has_data_errors(self) -> bool:
        return any(t.data_errors for t in self.tables)

    def rows(self):
        """(s, N, verdict) for every flagged row, sorted."""
        return [(t.s, n, t.verdict(n)) for t in self.tables for n in sorted(t.flags)]


def _compare_catalog(report: ConvexityReport, catalog: MagicCatalog) -> CatalogComparison | None:
    s = report.s
    if s not in catalog.sets() or report.interior is None:
        return None
    lo, hi = report.interior
    span = set(range(max(lo, CATALOG_RANGE.start), min(hi, CATALOG_RANGE.stop - 1) + 1))
    span &= set(report.ddv)
    known = catalog.c_plus(int(s)) & span
    found = report.c_plus & span
    return CatalogComparison(int(s), found & known, found - known, known - found)


def validate(tables: Sequence[EnergyTable], tol: float = 0.0,
             catalog: MagicCatalog | None = None) -> ValidationReport:
    """Run every necessary-condition check; tables are processed in order of s."""
    catalog = catalog or MagicCatalog()
    ordered = sorted(tables, key=lambda t: (t.s, t.ns()))
    reports = [TableReport(t.s, t.label) for t in ordered]

    for t, rep in zip(ordered, reports):
        finite = EnergyTable(t.s, {n: r for n, r in t.rows.items() if math.isfinite(r[0])}, t.label)
        for n in t.ns():
            if not math.isfinite(t.v(n)):
                rep.flag(n, "non-finite value")
        for viol in monotonicity_check_N(finite):
            rep.flag(viol.n, f"not above v({viol.earlier})")
        rep.convexity = convexity_sets(finite, tol)
        if t.s < 0:
            for n, d in rep.convexity.ddv.items():
                b = ddv_bounds_prop1(t.s, n, finite.v(n), d)
                if not b.satisfied:
                    rep.flag(n, f"second difference {d!r} outside [{b.lower!r}, {b.upper!r}]")
        rep.catalog = _compare_catalog(rep.convexity, catalog)

    by_s = {id(t): rep for t, rep in zip(ordered, reports)}
    for viol in monotonicity_check_s(ordered):
        for t in ordered:
            if t.s in (viol.s_lo, viol.s_hi) and viol.n in t.rows:
                other = viol.s_hi if t.s == viol.s_lo else viol.s_lo
                by_s[id(t)].flag(viol.n, f"not ordered against s={other!r}")
    for rep in reports:
        for n in rep.flags:
            rep.flags[n] = sorted(set(rep.flags[n]))
    return ValidationReport(reports)
