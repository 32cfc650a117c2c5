"""Rigorous bounds on second differences and conjectured large-N expansions.

Bounds for s < 0 rely on V_s(0) = -1/s being finite. The adjusted energies
u = v + (1 - W_s)/s (u = v - W_log at s = 0) tend to 0 as N grows, and every
discrete N-derivative of u coincides with that of v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import A_LOG, B_LOG, C_2, C_LOG, C_LOG_EXPANSION, W_LOG, w_s
from .core import add_point, average_pair_energy, pair_energy, point_energies, remove_point
from .errors import DomainError, UnsupportedRangeError
from .tables import EnergyTable
from .zeta import zeta_hexagonal

__all__ = [
    "BoundReport", "ddv_bounds_prop1", "ddv_upper_prop2", "ddv_upper_pointwise",
    "monotonicity_complement", "c_s_conjectured", "u_from_v", "v_from_u", "u_table",
    "u_band", "u_leading", "ddu_leading", "tilde_u_leading", "log_energy_expansion",
    "residual_omega", "A_LOG", "B_LOG", "C_2", "C_LOG", "C_LOG_EXPANSION", "W_LOG", "w_s",
]


@dataclass
class BoundReport:
    n: int
    s: float
    lower: float
    upper: float
    observed: float | None = None

    @property
    def satisfied(self) -> bool | None:
        if self.observed is None:
            return None
        return self.lower <= self.observed <= self.upper


def _need_negative(s: float):
    if not s < 0:
        raise UnsupportedRangeError("these bounds hold only for s < 0")


def ddv_bounds_prop1(s: float, n: int, v_n: float, observed: float | None = None) -> BoundReport:
    """Two-sided bound on the second difference at N from v(N) alone (s < 0)."""
    _need_negative(s)
    if n < 3:
        raise DomainError("n must be at least 3")
    a = v_n + 1.0 / s
    return BoundReport(n, s, 2.0 / ((n + 1) * (n - 2)) * a, -2.0 / ((n + 1) * n) * a, observed)


def ddv_upper_prop2(s: float, n: int, v_nm1: float) -> float:
    """Upper bound -(2/((N+1)N)) (v(N-1) + 1/s) on the second difference (s < 0)."""
    _need_negative(s)
    if n < 3:
        raise DomainError("n must be at least 3")
    return -2.0 / ((n + 1) * n) * (v_nm1 + 1.0 / s)


def ddv_upper_pointwise(s: float, c_opt, ell: int | None = None, ell_prime: int | None = None) -> float:
    """Upper bound on the second difference at N from one (putatively) optimal configuration.

    -(2/N)[PE_l - PE_l' + <V>(w + q_l') - <V>(w - q_l)] - (2/(N(N-1)))[<V>(w + q_l') - V_s(0)],
    where w + q_l' duplicates point l'. This equals
    <V>(w - q_l) + <V>(w + q_l') - 2 <V>(w), the second difference of the two
    trial configurations. Defaults: l minimizes and l' maximizes the point energy.
    """
    _need_negative(s)
    x = np.asarray(c_opt, dtype=float)
    n = len(x)
    pe = point_energies(s, x)
    if ell is None:
        ell = int(np.argmin(pe))
    if ell_prime is None:
        ell_prime = int(np.argmax(pe))
    plus = average_pair_energy(s, add_point(x, x[ell_prime]))
    minus = average_pair_energy(s, remove_point(x, ell))
    v0 = pair_energy(s, 0.0)
    return (-2.0 / n * (pe[ell] - pe[ell_prime] + plus - minus)
            - 2.0 / (n * (n - 1)) * (plus - v0))


def monotonicity_complement(s: float, n: int, v_np1: float) -> float:
    """Lower bound on v(N) from v(N+1): ((N+1)N/((N+2)(N-1))) v(N+1) - 2 V_s(0)/((N+2)(N-1))."""
    _need_negative(s)
    return ((n + 1) * n / ((n + 2) * (n - 1)) * v_np1
            - 2.0 * pair_energy(s, 0.0) / ((n + 2) * (n - 1)))


# ---------------------------------------------------------------- constants


@dataclass(frozen=True)
class SignDiagnostic:
    """Value not computed; only its sign is known."""

    sign: int
    note: str


def c_s_conjectured(s: float):
    """C_s = (sqrt3/2)^(s/2) zeta_hex(s) for s > 2; sign-only diagnostic on (0, 2]."""
    if s > 2:
        return (math.sqrt(3) / 2) ** (s / 2) * zeta_hexagonal(s)
    if 0 < s <= 2:
        return SignDiagnostic(-1, "continued C_s is negative on (0, 2); value needs zeta continuation")
    raise UnsupportedRangeError("C_s is available for s > 0 only")


# ---------------------------------------------------------------- u and tilde-u


def _offset(s: float) -> float:
    if s == 2:
        raise DomainError("s = 2 has no adjusted energy; use tilde_u_leading")
    return -W_LOG if s == 0 else (1.0 - w_s(s)) / s


def u_from_v(s: float, n: int, v: float) -> float:
    """u = v + (1 - W_s)/s, and u = v - W_log at s = 0 (the continuous limit)."""
    return v + _offset(s)


def v_from_u(s: float, n: int, u: float) -> float:
    return u - _offset(s)


def u_table(table: EnergyTable) -> EnergyTable:
    """Shift a v-table to adjusted values."""
    return table.map(lambda n, v: u_from_v(table.s, n, v))


def u_band(s: float, n: int, c_const: float, C_const: float) -> tuple[float, float]:
    """Two-sided band for u(N) given the constants 0 < c < C (which must be supplied)."""
    if not C_const > c_const > 0:
        raise DomainError("need C > c > 0")
    if not -2 < s < 2:
        raise DomainError("band needs -2 < s < 2")
    if s == 0:
        base = W_LOG - 0.5 * math.log(n)
        den = n * (n - 1)
        return (base - C_const * n) / den, (base - c_const * n) / den
    ws = w_s(s)
    lo_c = (ws - c_const * n ** (s / 2)) / (s * (n - 1))
    lo_C = (ws - C_const * n ** (s / 2)) / (s * (n - 1))
    return (lo_c, lo_C) if s < 0 else (lo_C, lo_c)


def _cs_term(s: float) -> float | None:
    c = c_s_conjectured(s) if s > 0 else None
    return c if isinstance(c, float) else None


def u_leading(s: float, n: int) -> float:
    """Leading large-N form of u(N) for -2 < s < 2.

    For s != 0 the C_s term is included only where C_s has a value (s > 2 is
    outside this range), so it is omitted here; see ``u_leading_terms``.
    """
    return u_leading_terms(s, n)[0]


def u_leading_terms(s: float, n: int) -> tuple[float, bool]:
    """(value, C_s term included?) of the leading form."""
    if s == 0:
        k = W_LOG + C_LOG
        ln = math.log(n)
        return -0.5 * ln / n + k / n - 0.5 * ln / n ** 2 + k / n ** 2, True
    if not -2 < s < 2:
        raise DomainError("u_leading covers -2 < s < 2; use tilde_u_leading above")
    cs = _cs_term(s)
    val = w_s(s) / s / n
    if cs is not None:
        val += cs / (4 * math.pi) ** (s / 2) * n ** (s / 2 - 1) / s
    return val, cs is not None


def ddu_leading(s: float, n: int) -> float:
    """Leading large-N form of the second difference of u (C_s term omitted where unavailable)."""
    if s == 0:
        return -math.log(n) / n ** 3 + (1.5 + W_LOG + C_LOG) / n ** 3
    if not -2 < s < 2:
        raise DomainError("ddu_leading covers -2 < s < 2")
    val = 2.0 * w_s(s) / s / n ** 3
    cs = _cs_term(s)
    if cs is not None:
        val += (1 - s / 2) * (2 - s / 2) / s * cs / (4 * math.pi) ** (s / 2) * n ** (s / 2 - 3)
    return val


def lattice_coefficient(s: float) -> float:
    """(sqrt3/(8 pi))^(s/2) zeta_hex(s) = C_s/(4 pi)^(s/2)."""
    return (math.sqrt(3) / (8 * math.pi)) ** (s / 2) * zeta_hexagonal(s)


def tilde_u_leading(s: float, n: int, u_val: float) -> float:
    """Re-adjusted average energy from an adjusted one.

    2 < s < 4: u - (1/s) (sqrt3/(8 pi))^(s/2) zeta_hex(s) N^(s/2-1).
    s = 2: ``u_val`` is the average of r^-2/2 and the result subtracts (C_2 + ln(N)/4)/2.
    Both agree with averaging the re-adjusted pair kernel.
    """
    if s == 2:
        return u_val - 0.5 * (C_2 + 0.25 * math.log(n))
    if 2 < s < 4:
        return u_val - lattice_coefficient(s) * n ** (s / 2 - 1) / s
    raise UnsupportedRangeError("re-adjusted energies cover 2 <= s < 4")


def log_energy_expansion(n: int) -> float:
    """a N^2 + b N ln N + c N for the optimal log energy sum_{i<j} -ln|q_i - q_j|."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return A_LOG * n * n + B_LOG * n * math.log(n) + C_LOG_EXPANSION * n


def residual_omega(s: float, table: EnergyTable, adjusted: bool = False) -> dict[int, float]:
    """Omega_s(N) = u(N) - u_leading(s, N); v-tables are converted unless ``adjusted``."""
    out = {}
    for n in table.ns():
        u = table.v(n) if adjusted else u_from_v(s, n, table.v(n))
        out[n] = u - u_leading(s, n)
    return out
