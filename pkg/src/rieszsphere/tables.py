"""Energy tables: rows N -> (v, provenance) at a fixed exponent s."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


@dataclass
class EnergyTable:
    """Minimal (or putatively minimal) average standardized energies at one s.

    ``label`` marks tables that are not optimizer data (e.g. digital nets), so
    validators can tell construction artifacts from data errors.
    """

    s: float
    rows: dict[int, tuple[float, str]] = field(default_factory=dict)
    label: str = ""

    @classmethod
    def from_values(cls, s: float, values: Mapping[int, float] | Iterable[tuple[int, float]],
                    provenance: str = "external", label: str = "") -> "EnergyTable":
        items = values.items() if isinstance(values, Mapping) else values
        return cls(s, {int(n): (float(v), provenance) for n, v in items}, label)

    def ns(self) -> list[int]:
        return sorted(self.rows)

    def v(self, n: int) -> float:
        return self.rows[n][0]

    def values(self) -> dict[int, float]:
        return {n: self.rows[n][0] for n in self.ns()}

    def is_contiguous(self) -> bool:
        ns = self.ns()
        return bool(ns) and ns == list(range(ns[0], ns[-1] + 1))

    def map(self, f, provenance: str | None = None) -> "EnergyTable":
        """New table with every value replaced by ``f(n, v)``."""
        rows = {n: (float(f(n, v)), p if provenance is None else provenance)
                for n, (v, p) in self.rows.items()}
        return EnergyTable(self.s, rows, self.label)

    def __len__(self) -> int:
        return len(self.rows)
