"""CSV formats for energy tables and point configurations.

Floats are written with ``repr`` (shortest round-tripping form, at most 17
significant digits), so write -> read is bit-stable.
"""

from __future__ import annotations

import csv
import math
import warnings
from pathlib import Path

import numpy as np

from .core import convert_energy
from .errors import FormatError
from .tables import EnergyTable

TABLE_HEADER = ["N", "s", "energy", "provenance"]
CONVENTIONAL_HEADER = ["N", "s", "conventional_energy", "provenance"]
DEFAULT_PROVENANCE = "external"
NORM_TOLERANCE = 1e-8


def _float(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise FormatError(f"{where}: not a number: {text!r}") from None


def read_energy_table(path) -> EnergyTable:
    """Load a table; a conventional-energy header is converted to standardized v on load."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(f.strip() for f in r)]
    if not rows:
        raise FormatError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    if header not in (TABLE_HEADER, CONVENTIONAL_HEADER, TABLE_HEADER[:3], CONVENTIONAL_HEADER[:3]):
        raise FormatError(f"{path}: header must be {','.join(TABLE_HEADER)} "
                          f"or {','.join(CONVENTIONAL_HEADER)}")
    conventional = header[2] == "conventional_energy"
    s_val = None
    out: dict[int, tuple[float, str]] = {}
    for lineno, r in enumerate(rows[1:], start=2):
        where = f"{path}:{lineno}"
        if len(r) not in (3, 4):
            raise FormatError(f"{where}: expected 3 or 4 fields")
        try:
            n = int(r[0])
        except ValueError:
            raise FormatError(f"{where}: N must be an integer") from None
        s = _float(r[1], where)
        if s_val is None:
            s_val = s
        elif s != s_val:
            raise FormatError(f"{where}: mixed s values ({s_val} and {s})")
        value = _float(r[2], where)
        if conventional and math.isfinite(value):
            value = convert_energy(s, n, value, "to_standardized")
        prov = r[3].strip() if len(r) == 4 and r[3].strip() else DEFAULT_PROVENANCE
        if n in out:
            raise FormatError(f"{where}: duplicate row for N={n}")
        out[n] = (value, prov)
    if s_val is None:
        raise FormatError(f"{path}: no data rows")
    table = EnergyTable(s_val, out)
    if not table.is_contiguous():
        warnings.warn(f"{path}: N values are not contiguous; derivatives skip the gaps",
                      stacklevel=2)
    return table


def write_energy_table(table: EnergyTable, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for n in table.ns():
            v, prov = table.rows[n]
            w.writerow([n, repr(float(table.s)), repr(float(v)), prov])


def read_configuration(path) -> np.ndarray:
    """First line N, then N lines x,y,z; points within 1e-8 of the sphere are renormalized."""
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise FormatError(f"{path}: empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"{path}: first line must be the point count") from None
    if len(lines) - 1 != n:
        raise FormatError(f"{path}: header says {n} points, found {len(lines) - 1}")
    pts = []
    for i, ln in enumerate(lines[1:], start=2):
        fields = ln.split(",")
        if len(fields) != 3:
            raise FormatError(f"{path}:{i}: expected x,y,z")
        pts.append([_float(f, f"{path}:{i}") for f in fields])
    x = np.array(pts, dtype=float).reshape(n, 3)
    norms = np.linalg.norm(x, axis=1)
    bad = np.nonzero(~(np.abs(norms - 1.0) <= NORM_TOLERANCE))[0]
    if len(bad):
        raise FormatError(f"{path}: point {int(bad[0])} has norm {norms[bad[0]]!r}, "
                          f"more than {NORM_TOLERANCE} off the sphere")
    return x / norms[:, None]


def write_configuration(c, path) -> None:
    x = np.asarray(c, dtype=float)
    with open(path, "w") as fh:
        fh.write(f"{len(x)}\n")
        for p in x:
            fh.write(",".join(repr(float(t)) for t in p) + "\n")


def two_column(pairs) -> str:
    """Plot-ready text: one ``x y`` pair per line."""
    return "".join(f"{a!r} {b!r}\n" for a, b in pairs)
