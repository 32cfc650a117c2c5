"""Energy kernels for N-point configurations on the unit sphere.

A configuration is an ``(N, 3)`` float array of unit vectors. Coincident
points are allowed (they occur in the degenerate s <= -2 arrangements); with
s >= 0 a zero distance yields ``+inf`` rather than an exception, so degenerate
configurations simply compare as worse.

The standardized pair energy is V_s(r) = (r^-s - 1)/s with V_0(r) = -ln r,
continuous in s. Indices are 0-based throughout.
"""

from __future__ import annotations

import math

import numpy as np

from .constants import C_2, LOG_THRESHOLD, W_LOG, w_s
from .errors import DomainError, UnsupportedRangeError
from .zeta import zeta_hexagonal


def normalize(points) -> np.ndarray:
    """Project each row onto the unit sphere."""
    x = np.array(points, dtype=float)
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def as_config(points) -> np.ndarray:
    """Validate shape (N >= 2, three coordinates) and renormalize."""
    x = np.asarray(points, dtype=float)
    if x.ndim != 2 or x.shape[1] != 3:
        raise DomainError(f"configuration must have shape (N, 3), got {x.shape}")
    if x.shape[0] < 2:
        raise DomainError("a configuration needs at least two points")
    return normalize(x)


def chordal_distance(p, q) -> float:
    """|p - q| for points on the unit sphere."""
    return float(np.linalg.norm(np.asarray(p, dtype=float) - np.asarray(q, dtype=float)))


#: Below this squared distance the Gram-matrix value is replaced by the
#: directly computed one; 2 - 2 p.q loses all relative accuracy near 0.
_NEAR_D2 = 1e-4


def cross_squared_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Squared distances between rows of ``a`` (..., M, 3) and ``b`` (..., K, 3), shape (..., M, K).

    Uses the Gram matrix, clamped to [0, 4], and recomputes near-coincident
    pairs from coordinate differences so duplicated points give exactly 0.
    """
    d2 = np.clip(2.0 - 2.0 * (a @ np.swapaxes(b, -1, -2)), 0.0, 4.0)
    idx = np.nonzero(d2 < _NEAR_D2)
    if len(idx[0]):
        lead = idx[:-2]
        diff = a[lead + (idx[-2],)] - b[lead + (idx[-1],)]
        d2[idx] = np.sum(diff * diff, axis=-1)
    return d2


def _squared_distances(x: np.ndarray) -> np.ndarray:
    """All squared chordal distances within each configuration of ``x`` (..., N, 3)."""
    return cross_squared_distances(x, x)


def pair_distances(c) -> np.ndarray:
    """Condensed vector of the N(N-1)/2 pair distances (i < j order)."""
    x = np.asarray(c, dtype=float)
    i, j = np.triu_indices(len(x), 1)
    return np.sqrt(_squared_distances(x)[i, j])


def _kernel_from_log(s: float, log_r: np.ndarray) -> np.ndarray:
    """V_s given log r (log_r may contain -inf for coincident points)."""
    if s == 0:
        return -log_r
    with np.errstate(invalid="ignore", over="ignore"):
        if abs(s) >= LOG_THRESHOLD:
            # expm1(-s ln r)/s == (r^-s - 1)/s without cancellation near r = 1
            return np.expm1(-s * log_r) / s
        x = -s * log_r
        ratio = np.where(x == 0, 1.0, np.expm1(x) / np.where(x == 0, 1.0, x))
        out = -log_r * ratio
    zero = np.isneginf(log_r)
    if np.any(zero):
        out = np.where(zero, np.inf if s > 0 else -1.0 / s, out)
    return out


def pair_energy(s: float, r):
    """Standardized Riesz pair energy V_s(r).

    ``V_s(0) = -1/s`` for s < 0 and ``+inf`` for s >= 0. Accepts scalars or
    arrays; returns the same kind.
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise DomainError("distance must be nonnegative")
    with np.errstate(divide="ignore"):
        out = _kernel_from_log(float(s), np.log(r_arr))
    return float(out) if np.ndim(r) == 0 else out


def _energy_from_d2(s: float, d2: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return _kernel_from_log(s, 0.5 * np.log(d2))


def average_pair_energy(s: float, c) -> float:
    """<V_s>(c): mean of V_s over all pairs."""
    x = np.asarray(c, dtype=float)
    if len(x) < 2:
        raise DomainError("need at least two points")
    i, j = np.triu_indices(len(x), 1)
    return float(np.mean(_energy_from_d2(float(s), _squared_distances(x)[i, j])))


def separation(c) -> float:
    """Minimum pair distance."""
    return float(np.min(pair_distances(c)))


def convert_energy(s: float, n: int, value: float, direction: str) -> float:
    """Convert between conventional and standardized energies.

    ``direction`` is ``"to_standardized"`` (E = sum_{i<j} r^-s, or the log
    energy sum_{i<j} -ln r at s = 0) or ``"to_conventional"``.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    pairs = n * (n - 1) / 2.0
    if direction == "to_standardized":
        return value / pairs if s == 0 else (value / pairs - 1.0) / s
    if direction == "to_conventional":
        return value * pairs if s == 0 else pairs * (s * value + 1.0)
    raise ValueError(f"unknown direction {direction!r}")


def large_s_packing_functional(s: float, c) -> float:
    """[<V_s>(c) + 1/s]^(-1/s); tends to the separation as s grows."""
    if not s > 0:
        raise DomainError("packing functional needs s > 0")
    x = np.asarray(c, dtype=float)
    d = pair_distances(x)
    if np.any(d == 0):
        raise DomainError("coincident points")
    # <V_s> + 1/s = mean(r^-s)/s; factor out rho^-s so large s does not overflow
    rho = float(np.min(d))
    bracket = float(np.mean((rho / d) ** s)) / s
    if not bracket > 0:
        raise DomainError("nonpositive bracket")
    return rho * bracket ** (-1.0 / s)


# ---------------------------------------------------------------- adjusted


def _readjust_offset(s: float, n: int | None) -> float:
    """Constant subtracted from r^-s (before the 1/s) in the adjusted kernels."""
    if s < 2:
        return w_s(s)
    if s >= 4:
        raise UnsupportedRangeError("adjusted energies are defined only for s < 4")
    if n is None:
        raise DomainError("s >= 2 needs the number of points for the re-adjusted kernel")
    if s == 2:
        return C_2 + 0.25 * math.log(n)
    lattice = (math.sqrt(3.0) / (8.0 * math.pi)) ** (s / 2.0) * zeta_hexagonal(s)
    return w_s(s) + lattice * n ** (s / 2.0 - 1.0)


def adjusted_pair_energy(s: float, r, n_for_readjust: int | None = None):
    """U_s(r) = (r^-s - W_s)/s, U_0 = -ln r - W_log; re-adjusted tilde-U for 2 <= s < 4."""
    if s == 0:
        return pair_energy(0.0, r) - W_LOG
    off = _readjust_offset(float(s), n_for_readjust)
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise DomainError("adjusted energy needs r > 0")
    out = (r_arr ** (-s) - off) / s
    return float(out) if np.ndim(r) == 0 else out


def average_adjusted_energy(s: float, c) -> float:
    """Pairwise average of the adjusted kernel; uses N of ``c`` where needed."""
    x = np.asarray(c, dtype=float)
    n = len(x)
    if s == 0:
        return average_pair_energy(0.0, x) - W_LOG
    off = _readjust_offset(float(s), n)
    d = pair_distances(x)
    if np.any(d == 0):
        raise DomainError("coincident points")
    return float(np.mean((d ** (-s) - off) / s))


# ---------------------------------------------------------------- point energies


def potential_field(s: float, c, x) -> float:
    """(1/N) sum_j V_s(|x - q_j|)."""
    pts = np.asarray(c, dtype=float)
    d2 = cross_squared_distances(pts, np.asarray(x, dtype=float)[None, :])[:, 0]
    return float(np.mean(_energy_from_d2(float(s), d2)))


def point_energies(s: float, c) -> np.ndarray:
    """All point energies (1/(N-1)) sum_{j != l} V_s(|q_j - q_l|)."""
    x = np.asarray(c, dtype=float)
    n = len(x)
    e = _energy_from_d2(float(s), _squared_distances(x))
    np.fill_diagonal(e, 0.0)
    return e.sum(axis=1) / (n - 1)


def point_energy(s: float, c, ell: int) -> float:
    """Point energy of the point with 0-based index ``ell``."""
    n = len(c)
    if not 0 <= ell < n:
        raise IndexError(f"index {ell} out of range for {n} points")
    x = np.asarray(c, dtype=float)
    d2 = cross_squared_distances(np.delete(x, ell, axis=0), x[ell][None, :])[:, 0]
    return float(np.mean(_energy_from_d2(float(s), d2)))


def remove_point(c, ell: int) -> np.ndarray:
    return np.delete(np.asarray(c, dtype=float), ell, axis=0)


def add_point(c, x) -> np.ndarray:
    return np.vstack([np.asarray(c, dtype=float), np.asarray(x, dtype=float)[None, :]])


def master_identity_residual(s: float, c, ell: int) -> float:
    """<V>(c) - [((N-2)/N) <V>(c minus q_l) + (2/N) point_energy(l)]; zero up to rounding."""
    n = len(c)
    if n < 3:
        raise DomainError("master identity needs N >= 3")
    if not 0 <= ell < n:
        raise IndexError(f"index {ell} out of range for {n} points")
    reduced = average_pair_energy(s, remove_point(c, ell))
    return average_pair_energy(s, c) - ((n - 2) / n * reduced + 2.0 / n * point_energy(s, c, ell))


def leave_one_out_average(s: float, c) -> float:
    """(1/N) sum_l <V>(c minus q_l); equals <V>(c)."""
    n = len(c)
    return float(np.mean([average_pair_energy(s, remove_point(c, k)) for k in range(n)]))


# ---------------------------------------------------------------- gradients


def batch_energy_gradient(s: float, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Energies, tangent gradients and minimum distances for a stack of configurations.

    ``x`` has shape (R, N, 3). Returns (energy (R,), gradient (R, N, 3),
    min distance (R,)).
    """
    r, n, _ = x.shape
    d2 = _squared_distances(x)
    iu, ju = np.triu_indices(n, 1)
    d2u = d2[:, iu, ju]
    min_d = np.sqrt(d2u.min(axis=1))
    energy = _energy_from_d2(s, d2u).mean(axis=1)
    coef = 2.0 / (n * (n - 1))
    # coincident points give inf/nan gradients; callers detect them through min_d
    with np.errstate(divide="ignore", invalid="ignore"):
        w = d2 ** (-s / 2.0 - 1.0)
        idx = np.arange(n)
        w[:, idx, idx] = 0.0
        wq = w @ x
        # Euclidean gradient is -coef * (q_i sum_j w_ij - (Wq)_i); the radial part drops out
        grad = coef * (wq - np.sum(wq * x, axis=-1, keepdims=True) * x)
    return energy, grad, min_d


def energy_gradient(s: float, c) -> np.ndarray:
    """Tangent-space gradient of <V_s> with respect to each point."""
    x = np.asarray(c, dtype=float)
    if np.any(pair_distances(x) == 0):
        raise DomainError("gradient undefined for coincident points")
    return batch_energy_gradient(float(s), x[None])[1][0]


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Haar-random rotation matrix."""
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q
