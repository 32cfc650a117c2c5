"""Continuum constants of the standardized Riesz problem on the 2-sphere."""

from __future__ import annotations

import math

from .errors import DomainError

#: Below this |s| the general kernel switches to the expm1-based stable form.
LOG_THRESHOLD = 1e-8

#: s-derivative of W_s at s = 0, i.e. 1/2 + ln(1/2).
W_LOG = 0.5 + math.log(0.5)

#: Constant of the conjectured log-energy expansion,
#: 2 ln 2 + (1/2) ln(2/3) + 3 ln(sqrt(pi)/Gamma(1/3)).
C_LOG = -0.05560530494339251850

#: Constant in the re-adjusted s = 2 energy (built from Stieltjes constants).
C_2 = -0.08576841030090

#: Coefficients of E_0(N) = a N^2 + b N ln N + c N for the optimal log energy
#: sum_{i<j} -ln|q_i - q_j|.
A_LOG = 0.25 * math.log(math.e / 4.0)
B_LOG = -0.25
C_LOG_EXPANSION = math.log(
    2.0 * (2.0 / 3.0) ** 0.25 * math.pi ** 0.75 / math.gamma(1.0 / 3.0) ** 1.5
)


def w_s(s: float) -> float:
    """Continuum energy 2^(1-s)/(2-s) of the uniform measure (continued past s=2)."""
    if s == 2:
        raise DomainError("W_s has a pole at s = 2")
    return 2.0 ** (1.0 - s) / (2.0 - s)


def w_log() -> float:
    """Return W_log = 1/2 + ln(1/2)."""
    return W_LOG


def c_log_closed_form() -> float:
    """Evaluate the Gamma-function expression behind ``C_LOG``."""
    return (2.0 * math.log(2.0) + 0.5 * math.log(2.0 / 3.0)
            + 3.0 * math.log(math.sqrt(math.pi) / math.gamma(1.0 / 3.0)))
