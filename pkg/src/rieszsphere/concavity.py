"""Discrete-derivative analysis of energy tables and the embedded convexity catalog.

For a table N -> v(N) the second difference v(N-1) - 2 v(N) + v(N+1)
partitions the interior of the N-range into local concavity (C-), linearity
(C0) and convexity (C+). At s = 0 the convexity set is the set of "magic
numbers".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .tables import EnergyTable

#: Range of N covered by the embedded experimental sets.
CATALOG_RANGE = range(3, 200)

#: Returned by catalog queries outside CATALOG_RANGE.
UNKNOWN = None

_C0 = frozenset({6, 12, 24, 32, 48, 60, 67, 72, 80, 104, 108, 122, 132, 137, 146, 150, 153,
                 168, 182, 187, 192, 195})
_C1 = frozenset({4, 6, 12, 18, 20, 22, 24, 27, 32, 44, 48, 50, 60, 62, 67, 72, 75, 77, 78, 80,
                 88, 94, 96, 98, 100, 104, 108, 111, 112, 117, 122, 127, 132, 135, 137, 141,
                 144, 146, 150, 153, 155, 159, 160, 162, 168, 170, 174, 180, 182, 184, 187,
                 192, 195, 197})
_C2 = frozenset({4, 6, 10, 12, 18, 20, 22, 24, 27, 28, 30, 32, 34, 40, 44, 45, 48, 50, 51, 54,
                 56, 60, 62, 67, 70, 72, 75, 77, 78, 80, 83, 88, 90, 92, 94, 96, 98, 100, 104,
                 106, 108, 111, 112, 115, 117, 122, 127, 130, 132, 135, 137, 141, 144, 146,
                 148, 150, 153, 155, 157, 159, 160, 162, 168, 170, 171, 174, 175, 177, 180,
                 182, 184, 187, 192, 195, 197})
_C3 = frozenset({4, 6, 8, 9, 10, 12, 14, 18, 20, 22, 24, 27, 28, 30, 32, 34, 36, 40, 42, 44,
                 45, 48, 50, 51, 54, 56, 60, 62, 63, 67, 70, 72, 75, 77, 78, 80, 83, 88, 90,
                 92, 94, 96, 98, 100, 104, 106, 108, 111, 112, 115, 117, 122, 124, 127, 130,
                 132, 135, 137, 141, 143, 144, 146, 148, 150, 153, 155, 157, 159, 160, 162,
                 165, 168, 170, 171, 174, 175, 177, 178, 180, 182, 184, 187, 192, 195, 197})

#: Printed differences between consecutive catalog sets.
PRINTED_DIFFERENCES = {
    (0, 1): frozenset({4, 18, 20, 22, 27, 44, 50, 62, 75, 77, 78, 88, 94, 96, 98, 100, 111, 112,
                       117, 127, 135, 141, 144, 155, 159, 160, 162, 170, 174, 180, 184, 197}),
    (1, 2): frozenset({10, 28, 30, 34, 40, 45, 51, 54, 56, 70, 83, 90, 92, 106, 115, 130, 148,
                       157, 171, 175, 177}),
    (2, 3): frozenset({8, 9, 14, 36, 42, 63, 124, 143, 165, 178}),
}


@dataclass(frozen=True)
class MagicCatalog:
    """Experimental convexity sets C+(s) for s in {-1, 0, 1, 2, 3}, N in 3..199.

    The canonical sets include the late corrections 177 in C+(3) and 197 in
    C+(2), C+(3); ``corrected=False`` returns the sets as they stood before.
    """

    corrected: bool = True

    def sets(self) -> dict[int, frozenset[int]]:
        c2, c3 = _C2, _C3
        if not self.corrected:
            c2 = c2 - {197}
            c3 = c3 - {177, 197}
        return {-1: frozenset(), 0: _C0, 1: _C1, 2: c2, 3: c3}

    def c_plus(self, s: int) -> frozenset[int]:
        return self.sets()[s]

    def contains(self, s: int, n: int):
        """True/False inside the catalog range, ``UNKNOWN`` outside it."""
        if n not in CATALOG_RANGE:
            return UNKNOWN
        return n in self.sets()[s]

    def chain_holds(self) -> bool:
        sets = self.sets()
        keys = sorted(sets)
        return all(sets[a] <= sets[b] for a, b in zip(keys, keys[1:]))


@dataclass
class ConvexityReport:
    s: float
    tol: float
    c_minus: set[int] = field(default_factory=set)
    c_zero: set[int] = field(default_factory=set)
    c_plus: set[int] = field(default_factory=set)
    ddv: dict[int, float] = field(default_factory=dict)
    interior: tuple[int, int] | None = None


# ---------------------------------------------------------------- differences


def _row(table: EnergyTable, n: int) -> float:
    if n not in table.rows:
        raise KeyError(f"table has no row for N={n}")
    return table.v(n)


def second_diff(table: EnergyTable, n: int) -> float:
    """v(N-1) - 2 v(N) + v(N+1)."""
    return _row(table, n - 1) - 2.0 * _row(table, n) + _row(table, n + 1)


def forward_diff(table: EnergyTable, n: int) -> float:
    """v(N+1) - v(N)."""
    return _row(table, n + 1) - _row(table, n)


def backward_diff(table: EnergyTable, n: int) -> float:
    """v(N) - v(N-1)."""
    return _row(table, n) - _row(table, n - 1)


def convexity_sets(table: EnergyTable, tol: float = 0.0) -> ConvexityReport:
    """Partition the interior N with all three neighbours present by the sign of the second difference."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    rep = ConvexityReport(table.s, tol)
    for n in table.ns():
        if n - 1 in table.rows and n + 1 in table.rows:
            d = second_diff(table, n)
            if math.isnan(d):
                continue
            rep.ddv[n] = d
            if d > tol:
                rep.c_plus.add(n)
            elif d < -tol:
                rep.c_minus.add(n)
            else:
                rep.c_zero.add(n)
    if rep.ddv:
        rep.interior = (min(rep.ddv), max(rep.ddv))
    return rep


def magic_numbers(report: ConvexityReport) -> set[int]:
    """The convexity set of an s = 0 report."""
    if report.s != 0:
        raise ValueError("magic numbers are defined for s = 0 reports")
    return set(report.c_plus)


def signed_indicator(a: Iterable[int], b: Iterable[int], rng: Iterable[int]) -> dict[int, int]:
    """+1 on b minus a, -1 on a minus b, 0 elsewhere."""
    a, b = set(a), set(b)
    return {n: (1 if n in b and n not in a else -1 if n in a and n not in b else 0) for n in rng}


# ---------------------------------------------------------------- monotonicity


@dataclass(frozen=True)
class NViolation:
    n: int
    earlier: int
    v: float
    v_earlier: float


@dataclass(frozen=True)
class SViolation:
    n: int
    s_lo: float
    s_hi: float
    v_lo: float
    v_hi: float


def monotonicity_check_N(table: EnergyTable) -> list[NViolation]:
    """Flag every row that does not exceed all earlier rows (one entry per offending pair)."""
    ns = table.ns()
    out = []
    for i, n in enumerate(ns):
        for m in ns[:i]:
            if not table.v(n) > table.v(m):
                out.append(NViolation(n, m, table.v(n), table.v(m)))
    return out


def monotonicity_check_s(tables: Sequence[EnergyTable]) -> list[SViolation]:
    """Flag (N, s_i, s_i+1) where v at the smaller s is not strictly below v at the larger."""
    ordered = sorted(tables, key=lambda t: t.s)
    out = []
    for lo, hi in zip(ordered, ordered[1:]):
        for n in sorted(set(lo.rows) & set(hi.rows)):
            if not lo.v(n) < hi.v(n):
                out.append(SViolation(n, lo.s, hi.s, lo.v(n), hi.v(n)))
    return out


# ---------------------------------------------------------------- statistics


@dataclass(frozen=True)
class SetStats:
    size: int
    odd: int
    coverage_percent: float
    odd_percent: float        # NaN for the empty set


def set_stats(members: Iterable[int], rng: Iterable[int] = CATALOG_RANGE) -> SetStats:
    rng = set(rng)
    members = set(members)
    inside = members & rng
    odd = sum(1 for n in members if n % 2)
    cov = 100.0 * len(inside) / len(rng) if rng else 0.0
    odd_pct = 100.0 * odd / len(members) if members else math.nan
    return SetStats(len(members), odd, cov, odd_pct)
