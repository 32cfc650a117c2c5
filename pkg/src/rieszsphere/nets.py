"""Two-dimensional Sobol' points and their area-preserving lift to the sphere."""

from __future__ import annotations

import numpy as np

from .core import _energy_from_d2, cross_squared_distances
from .tables import EnergyTable

_BITS = 32
NET_LABEL = "net, not optimal"


def _direction_numbers() -> np.ndarray:
    """Direction integers (scaled by 2^32) for both dimensions, shape (2, 32)."""
    v = np.zeros((2, _BITS), dtype=np.uint64)
    for k in range(_BITS):
        v[0, k] = 1 << (_BITS - 1 - k)       # van der Corput
    v[1, 0] = 1 << (_BITS - 1)               # primitive polynomial x + 1, m1 = 1
    for k in range(1, _BITS):
        v[1, k] = v[1, k - 1] ^ (v[1, k - 1] >> np.uint64(1))
    return v


_V = _direction_numbers()


def sobol_points(count: int, skip_zero: bool = False) -> np.ndarray:
    """First ``count`` points of the 2-D Sobol' sequence in Gray-code order, shape (count, 2).

    Point i is the XOR of the direction numbers selected by the bits of the
    Gray code i ^ (i >> 1); this equals the recursive Gray-code update.
    With ``skip_zero`` the initial point (0, 0) is dropped.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    start = 1 if skip_zero else 0
    i = np.arange(start, start + count, dtype=np.uint64)
    gray = i ^ (i >> np.uint64(1))
    out = np.zeros((count, 2), dtype=np.uint64)
    for k in range(_BITS):
        bit = ((gray >> np.uint64(k)) & np.uint64(1)).astype(bool)
        out[bit] ^= _V[:, k]
    return out.astype(float) / float(1 << _BITS)


def lambert_lift(uv) -> np.ndarray:
    """(u, v) -> z = 1 - 2v, phi = 2 pi u on the unit sphere; phi is 0 at the poles."""
    uv = np.asarray(uv, dtype=float)
    z = np.clip(1.0 - 2.0 * uv[:, 1], -1.0, 1.0)
    phi = 2.0 * np.pi * uv[:, 0]
    phi = np.where(np.abs(z) == 1.0, 0.0, phi)
    r = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def lambert_unlift(x) -> np.ndarray:
    """Inverse of ``lambert_lift`` away from the poles."""
    x = np.asarray(x, dtype=float)
    u = (np.arctan2(x[:, 1], x[:, 0]) / (2.0 * np.pi)) % 1.0
    return np.column_stack([u, (1.0 - x[:, 2]) / 2.0])


def spherical_net(count: int, skip_zero: bool = False) -> np.ndarray:
    return lambert_lift(sobol_points(count, skip_zero))


def prefix_energies(s: float, points: np.ndarray, block: int = 512) -> np.ndarray:
    """<V_s> of every prefix; entry k is the energy of the first k + 2 points."""
    x = np.asarray(points, dtype=float)
    n = len(x)
    contrib = np.zeros(n)
    for a in range(0, n, block):
        b = min(a + block, n)
        d2 = cross_squared_distances(x[a:b], x[:b])
        e = _energy_from_d2(float(s), d2)
        # keep pairs j < i only
        mask = np.arange(b)[None, :] < np.arange(a, b)[:, None]
        contrib[a:b] = np.where(mask, e, 0.0).sum(axis=1)
    total = np.cumsum(contrib)
    m = np.arange(2, n + 1)
    return total[1:] / (m * (m - 1) / 2.0)


def net_energy_curve(s: float, n_max: int, skip_zero: bool = False) -> EnergyTable:
    """Table N -> <V_s> of the first N lifted Sobol' points, N = 2..n_max."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    vals = prefix_energies(s, spherical_net(n_max, skip_zero))
    prov = "sobol-lambert" + (" skip-zero" if skip_zero else "")
    return EnergyTable(float(s), {n: (float(v), prov) for n, v in zip(range(2, n_max + 1), vals)},
                       NET_LABEL)


def cap_fraction(points: np.ndarray, center, height: float) -> float:
    """Fraction of points in the cap {x : x . center >= height}; its area fraction is (1 - height)/2."""
    return float(np.mean(np.asarray(points) @ np.asarray(center, dtype=float) >= height))
