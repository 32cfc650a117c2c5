"""Closed-form small-N optimizers, energies, second differences and critical exponents.

Every closed form for v_s(N) and its second difference is a combination
(1/s) sum_i c_i b_i^(k_i s) whose coefficients c_i sum to 1 (energies, with
the -1 folded in) or to 0 (second differences). Writing each term as
c_i expm1(s k_i ln b_i)/s makes the expression smooth through s = 0, where
it takes its limit sum_i c_i k_i ln b_i exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .constants import LOG_THRESHOLD
from .core import average_pair_energy, normalize
from .errors import BracketError, DomainError, NumericError, UnsupportedRangeError, WindowError

INF = math.inf
SHAPE_KINDS = ("antipodal", "equilateral_triangle", "tetrahedron", "triangular_bipyramid",
               "square_pyramid", "octahedron", "pentagonal_bipyramid", "cube",
               "square_antiprism", "icosahedron")

_SIN1 = math.sin(math.pi / 5)
_SIN2 = math.sin(2 * math.pi / 5)


# ---------------------------------------------------------------- shapes


@dataclass(frozen=True)
class NamedShape:
    """Symbolic small-N configuration; ``parameter`` is the base height z of a square pyramid."""

    kind: str
    parameter: float | None = None

    def __post_init__(self):
        if self.kind not in SHAPE_KINDS:
            raise DomainError(f"unknown shape {self.kind!r}")
        if self.kind == "square_pyramid":
            if self.parameter is None or not -1 < self.parameter < 0:
                raise DomainError("square_pyramid needs a base height z in (-1, 0)")
        elif self.parameter is not None:
            raise DomainError(f"{self.kind} takes no parameter")

    @property
    def n(self) -> int:
        return _SHAPE_SIZES[self.kind]


_SHAPE_SIZES = {"antipodal": 2, "equilateral_triangle": 3, "tetrahedron": 4,
                "triangular_bipyramid": 5, "square_pyramid": 5, "octahedron": 6,
                "pentagonal_bipyramid": 7, "cube": 8, "square_antiprism": 8, "icosahedron": 12}


def _ring(m: int, z: float = 0.0, phase: float = 0.0) -> np.ndarray:
    r = math.sqrt(max(1.0 - z * z, 0.0))
    a = phase + 2 * math.pi * np.arange(m) / m
    return np.column_stack([r * np.cos(a), r * np.sin(a), np.full(m, z)])


_NORTH = np.array([[0.0, 0.0, 1.0]])
_SOUTH = np.array([[0.0, 0.0, -1.0]])


def realize(shape: NamedShape) -> np.ndarray:
    """Canonical coordinates: poles on the z-axis, first ring point in the xz-plane."""
    k = shape.kind
    if k == "antipodal":
        pts = np.vstack([_NORTH, _SOUTH])
    elif k == "equilateral_triangle":
        pts = _ring(3)
    elif k == "tetrahedron":
        pts = np.vstack([_NORTH, _ring(3, -1.0 / 3.0)])
    elif k == "triangular_bipyramid":
        pts = np.vstack([_NORTH, _SOUTH, _ring(3)])
    elif k == "square_pyramid":
        pts = np.vstack([_NORTH, _ring(4, shape.parameter)])
    elif k == "octahedron":
        pts = np.vstack([_NORTH, _SOUTH, _ring(4)])
    elif k == "pentagonal_bipyramid":
        pts = np.vstack([_NORTH, _SOUTH, _ring(5)])
    elif k == "cube":
        pts = np.array([[a, b, c] for a in (1, -1) for b in (1, -1) for c in (1, -1)]) / math.sqrt(3)
    elif k == "square_antiprism":
        # equal-edge antiprism: h^2 = sqrt2 / (4 + sqrt2)
        h = math.sqrt(math.sqrt(2) / (4 + math.sqrt(2)))
        pts = np.vstack([_ring(4, h), _ring(4, -h, math.pi / 4)])
    else:
        z = 1 / math.sqrt(5)
        pts = np.vstack([_NORTH, _SOUTH, _ring(5, z), _ring(5, -z, math.pi / 5)])
    return normalize(pts)


def icosahedron_face_center() -> np.ndarray:
    """Unit vector through the center of the face (north pole, ring points 0 and 1)."""
    ico = realize(NamedShape("icosahedron"))
    return normalize(ico[0] + ico[2] + ico[3])


# ---------------------------------------------------------------- term algebra


class Term(NamedTuple):
    """c * base^(k s); ``base`` is a Fraction when the term is rational at integer k s."""

    coef: Fraction
    base: Fraction | float
    k: Fraction

    @property
    def log_rate(self) -> float:
        return float(self.k) * math.log(self.base)


def eval_terms(terms: tuple[Term, ...], s: float) -> float:
    """(1/s)(sum c b^(k s) - [sum c]) with the s = 0 limit, for coefficient sums 0 or 1."""
    if abs(s) < LOG_THRESHOLD:
        # expm1(x)/x = 1 + x/2 + O(x^2); avoids underflow of s * rate for tiny s
        return math.fsum(float(t.coef) * t.log_rate * (1 + 0.5 * s * t.log_rate) for t in terms)
    return math.fsum(float(t.coef) * math.expm1(s * t.log_rate) for t in terms) / s


def eval_terms_rational(terms: tuple[Term, ...], s: int) -> Fraction:
    """Exact rational value for integer s != 0 when every k s is an integer."""
    if s == 0 or int(s) != s:
        raise DomainError("rational evaluation needs a nonzero integer s")
    total = Fraction(0)
    for t in terms:
        e = t.k * int(s)
        if not isinstance(t.base, Fraction) or e.denominator != 1:
            raise DomainError("term is irrational at this s")
        total += t.coef * t.base ** int(e)
    total -= sum(t.coef for t in terms)
    return total / int(s)


def _t(c, base, k=1) -> Term:
    return Term(Fraction(c), base if isinstance(base, float) else Fraction(base), Fraction(k))


H = Fraction(1, 2)
V_TERMS: dict[int, tuple[Term, ...]] = {
    2: (_t(1, H, 1),),
    3: (_t(1, Fraction(1, 3), H),),
    4: (_t(1, Fraction(3, 8), H),),
    5: (_t(Fraction(1, 10), H, 1), _t(Fraction(3, 10), Fraction(1, 3), H), _t(Fraction(3, 5), H, H)),
    6: (_t(Fraction(1, 5), H, 1), _t(Fraction(4, 5), H, H)),
    7: (_t(Fraction(1, 21), H, 1), _t(Fraction(5, 21), 1 / (2 * _SIN2), 1),
        _t(Fraction(5, 21), 1 / (2 * _SIN1), 1), _t(Fraction(10, 21), H, H)),
}

DDV_TERMS: dict[int, tuple[Term, ...]] = {
    3: (_t(1, H, 1), _t(1, Fraction(3, 8), H), _t(-2, Fraction(1, 3), H)),
    4: (_t(Fraction(1, 10), H, 1), _t(Fraction(13, 10), Fraction(1, 3), H),
        _t(Fraction(3, 5), H, H), _t(-2, Fraction(3, 8), H)),
    # lower bound from the bi-pyramid trial configuration; exact where that is optimal
    5: (_t(1, Fraction(3, 8), H), _t(Fraction(-2, 5), H, H), _t(Fraction(-3, 5), Fraction(1, 3), H)),
    6: (_t(Fraction(5, 21), 1 / (2 * _SIN2), 1), _t(Fraction(5, 21), 1 / (2 * _SIN1), 1),
        _t(Fraction(3, 10), Fraction(1, 3), H), _t(Fraction(-11, 21), H, H),
        _t(Fraction(-53, 210), H, 1)),
}


class ExactValue(NamedTuple):
    value: float
    window: str


# ---------------------------------------------------------------- square pyramid


def _sqpyr_residual(z: float, s: float) -> float:
    return (1 + z) ** (1 + s / 2) + (2 + 2 ** (-s / 2)) * z


def square_pyramid_height(s: float, tol: float = 1e-15, max_iter: int = 200,
                          trace: list | None = None) -> float:
    """Base height z in (-1, 0) of the critical square pyramid (apex at the north pole).

    Newton from z0 = 0; the left side is convex for s > 0 so the iterates
    decrease monotonically. Falls back to bisection if Newton leaves (-1, 0)
    or exceeds ``max_iter``. ``trace`` collects the iterates.
    """
    if not s > -2:
        raise DomainError("square pyramid height needs s > -2")
    if not tol > 0:
        raise DomainError("tol must be positive")
    z = 0.0
    for _ in range(max_iter):
        f = _sqpyr_residual(z, s)
        df = (1 + s / 2) * (1 + z) ** (s / 2) + 2 + 2 ** (-s / 2)
        z_new = z - f / df
        if trace is not None:
            trace.append(z_new)
        if not -1 < z_new < 0:
            break
        if abs(z_new - z) <= tol:
            return z_new
        z = z_new
    else:
        if abs(_sqpyr_residual(z, s)) <= 1e-13:
            return z
    lo, hi = -1.0, 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _sqpyr_residual(mid, s) > 0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= tol:
            return 0.5 * (lo + hi)
    raise NumericError(f"square pyramid height did not converge at s={s}")


def _sqpyr_terms(z: float) -> tuple[Term, ...]:
    return (Term(Fraction(2, 5), 1 / (2 * (1 - z)), H),
            Term(Fraction(2, 5), 1 / (2 * (1 - z * z)), H),
            Term(Fraction(1, 5), 1 / (4 * (1 - z * z)), H))


def square_pyramid_energy(s: float) -> float:
    """<V_s> of the square pyramid whose base height solves the critical-point equation."""
    return eval_terms(_sqpyr_terms(square_pyramid_height(s)), s)


def bipyramid_energy(s: float) -> float:
    """<V_s> of the triangular bi-pyramid, any s."""
    return eval_terms(V_TERMS[5], s)


def log_scaled_terms(terms: tuple[Term, ...], s: float) -> tuple[float, float]:
    """(m, L) with (1/s) sum c (b^(k s) - 1) = m exp(L), for coefficient sum 0 and s != 0.

    The constant parts cancel, so the sum is rescaled by its largest
    exponential; this keeps the sign and leading digits when every b^(k s)
    underflows.
    """
    if sum(t.coef for t in terms) != 0:
        raise DomainError("log scaling needs coefficients summing to 0")
    if s == 0:
        raise DomainError("log scaling needs s != 0")
    rates = [s * t.log_rate for t in terms]
    top = max(rates)
    m = math.fsum(float(t.coef) * math.exp(r - top) for t, r in zip(terms, rates)) / s
    return m, top


def square_branch_second_difference(s: float) -> tuple[float, float]:
    """v(4) - 2 <V>(square pyramid) + v(6) as (m, L) with value m exp(L); see ``log_scaled_terms``."""
    pyr = tuple(Term(-2 * t.coef, t.base, t.k) for t in _sqpyr_terms(square_pyramid_height(s)))
    return log_scaled_terms(V_TERMS[4] + pyr + V_TERMS[6], s)


# ---------------------------------------------------------------- root finding


def find_root(f: Callable[[float], float], a: float, b: float, tol: float = 1e-12,
              grid: int = 0) -> float:
    """Bracketed root: bisection to width 1e-3, then secant (kept inside the bracket).

    With ``grid > 0`` the interval is first scanned on ``grid`` equal steps and
    the leftmost sign change is refined, so the smallest root is returned.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    if grid:
        xs = np.linspace(a, b, grid + 1)
        prev_x, prev_f = xs[0], f(xs[0])
        for x in xs[1:]:
            fx = f(x)
            if prev_f == 0:
                return float(prev_x)
            if np.sign(fx) != np.sign(prev_f):
                a, b = float(prev_x), float(x)
                break
            prev_x, prev_f = x, fx
        else:
            raise BracketError(f"no sign change on [{xs[0]}, {xs[-1]}]")
    fa, fb = f(a), f(b)
    if fa == 0:
        return a
    if fb == 0:
        return b
    if np.sign(fa) == np.sign(fb):
        raise BracketError(f"no sign change on [{a}, {b}]")
    while b - a > 1e-3:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0:
            return m
        if np.sign(fm) == np.sign(fa):
            a, fa = m, fm
        else:
            b, fb = m, fm
    x0, f0, x1, f1 = a, fa, b, fb
    for _ in range(200):
        if f1 == f0:
            break
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        if not a <= x2 <= b:
            x2 = 0.5 * (a + b)
        f2 = f(x2)
        if f2 == 0 or abs(x2 - x1) <= tol:
            return x2
        if np.sign(f2) == np.sign(fa):
            a, fa = x2, f2
        else:
            b, fb = x2, f2
        x0, f0, x1, f1 = x1, f1, x2, f2
    if b - a <= 2 * tol or abs(x1 - x0) <= 2 * tol:
        return x1
    raise NumericError("secant refinement did not converge")


@lru_cache(maxsize=None)
def s_dagger(tol: float = 1e-12) -> float:
    """Exponent where the square pyramid and the bi-pyramid have equal energy."""
    return find_root(lambda s: bipyramid_energy(s) - square_pyramid_energy(s), 14.0, 16.0, tol)


# ---------------------------------------------------------------- exact energies


def _window_error(n: int, s: float, covered: str) -> WindowError:
    return WindowError(f"no closed form for N={n} at s={s}: closed forms cover {covered}; "
                       "outside these windows use the minimizer")


def exact_v(n: int, s: float) -> ExactValue:
    """Closed-form v_s(N) for N in 2..7 inside the validity windows.

    N in {2,3,4,6}: any s > -2. N = 5: bi-pyramid up to s_dagger, square
    pyramid above. N = 7: pentagonal bi-pyramid on [0, 2] only; other
    exponents have no published coordinates and must come from the minimizer.
    """
    if n not in range(2, 8):
        raise WindowError(f"no closed form for N={n}; closed forms exist for N in 2..7")
    if not s > -2:
        raise _window_error(n, s, "s > -2 (use v_minus_two / v_subcritical_even at and below -2)")
    if n in (2, 3, 4, 6):
        kind = {2: "antipodal", 3: "equilateral_triangle", 4: "tetrahedron", 6: "octahedron"}[n]
        return ExactValue(eval_terms(V_TERMS[n], s), f"{kind} (-2, inf)")
    if n == 5:
        sd = s_dagger()
        if s <= sd:
            return ExactValue(bipyramid_energy(s), f"triangular_bipyramid (-2, {sd:.9f}]")
        return ExactValue(square_pyramid_energy(s), f"square_pyramid [{sd:.9f}, inf)")
    if 0 <= s <= 2:
        return ExactValue(eval_terms(V_TERMS[7], s), "pentagonal_bipyramid [0, 2]")
    raise _window_error(n, s, "[0, 2] for N=7")


def exact_ddv(n: int, s: float) -> ExactValue:
    """Closed-form second difference v(N-1) - 2 v(N) + v(N+1).

    N = 3: s >= -2. N = 4: -2 <= s <= s_dagger. N = 6: 0 <= s <= 2 (the s = 0
    value is the limit). N = 5 returns the bi-pyramid expression, which is
    exact for -2 < s <= s_dagger and a rigorous lower bound for every s > -2.
    """
    if n == 3:
        if s < -2:
            raise _window_error(n, s, "s >= -2")
        return ExactValue(eval_terms(DDV_TERMS[3], s), "N=3 closed form [-2, inf)")
    if n == 4:
        sd = s_dagger()
        if not -2 <= s <= sd:
            raise _window_error(n, s, f"[-2, {sd:.9f}]")
        return ExactValue(eval_terms(DDV_TERMS[4], s), f"N=4 closed form [-2, {sd:.9f}]")
    if n == 5:
        if not s > -2:
            raise _window_error(n, s, "s > -2")
        tag = "exact" if s <= s_dagger() else "rigorous lower bound"
        return ExactValue(eval_terms(DDV_TERMS[5], s), f"N=5 bi-pyramid expression ({tag})")
    if n == 6:
        if not 0 <= s <= 2:
            raise _window_error(n, s, "[0, 2]")
        return ExactValue(eval_terms(DDV_TERMS[6], s), "N=6 closed form [0, 2]")
    raise WindowError(f"no closed-form second difference for N={n}")


def exact_ddv_rational(n: int, s: int) -> Fraction:
    """Exact rational second difference at integer s for N in {3, 4, 5}."""
    if n not in (3, 4, 5):
        raise DomainError("rational path exists for N in {3, 4, 5}")
    return eval_terms_rational(DDV_TERMS[n], s)


def ddv5_lower_bound(s: float) -> float:
    """(1/s)((3/8)^(s/2) - (2/5)(1/2)^(s/2) - (3/5)(1/3)^(s/2)); negative for all s > -2."""
    return eval_terms(DDV_TERMS[5], s)


# ---------------------------------------------------------------- s <= -2


def v_minus_two(n: int) -> float:
    """Minimal energy at s = -2, attained by any configuration with zero center of mass."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return -0.5 * (n + 1) / (n - 1)


def ddv_minus_two(n: int) -> float:
    """Exact second difference of v_minus_two: -2/((N-2)(N-1)N)."""
    if n < 3:
        raise DomainError("n must be at least 3")
    return -2.0 / ((n - 2) * (n - 1) * n)


def v_subcritical_even(s: float, n: int) -> float:
    """Energy of N/2 points at each pole for s < -2 (even N)."""
    if not s < -2:
        raise DomainError("v_subcritical_even needs s < -2")
    if n % 2:
        raise UnsupportedRangeError("odd N below s = -2 is open; only even N is supported")
    a = abs(s)
    return -((2 ** (a - 1) - 1) * n + 1) / (a * (n - 1))


def _arrangement_energy(s: float, groups: list[tuple[int, float]], n: int) -> float:
    """Average energy of labeled points stacked at sites; ``groups`` lists (pair count, distance)."""
    from .core import pair_energy
    total = sum(cnt * pair_energy(s, d) for cnt, d in groups)
    return total / (n * (n - 1) / 2)


def antipodal_arrangement_energy(s: float, n: int) -> float:
    """ceil(N/2) labeled points at the north pole, the rest at the south pole."""
    a = (n + 1) // 2
    b = n - a
    return _arrangement_energy(s, [(a * (a - 1) // 2 + b * (b - 1) // 2, 0.0), (a * b, 2.0)], n)


def triangle_arrangement_energy(s: float, n: int) -> float:
    """N/3 labeled points at each vertex of an equatorial equilateral triangle."""
    if n % 3:
        raise DomainError("N must be a multiple of 3")
    m = n // 3
    return _arrangement_energy(s, [(3 * m * (m - 1) // 2, 0.0), (3 * m * m, math.sqrt(3))], n)


def s3_crossover(n: int = 3, tol: float = 1e-12) -> float:
    """Exponent below -2 where antipodal and triangular arrangements of N labeled points tie.

    Closed form ln(4/9)/ln(4/3) for N = 3; for other odd multiples of 3 the
    tie is located numerically on (-20, -2).
    """
    if n % 3 or n % 2 == 0:
        raise DomainError("crossover exists for odd multiples of 3")
    if n == 3:
        return math.log(4 / 9) / math.log(4 / 3)
    f = lambda s: antipodal_arrangement_energy(s, n) - triangle_arrangement_energy(s, n)
    return find_root(f, -20.0, -2.0 - 1e-9, tol, grid=400)


def v_three_subcritical(s: float) -> ExactValue:
    """Lower of the two equilibrium arrangements of three labeled points for s < -2."""
    if not s < -2:
        raise DomainError("needs s < -2")
    a = antipodal_arrangement_energy(s, 3)
    t = triangle_arrangement_energy(s, 3)
    return ExactValue(a, "antipodal arrangement") if a < t else ExactValue(t, "equilateral_triangle")


# ---------------------------------------------------------------- N = 12 bound


def _ddv12_terms() -> tuple[Term, ...]:
    sin2 = _SIN2
    t = (3 + math.sqrt(5)) / (2 * math.sqrt(3) * sin2)
    u = (5 + math.sqrt(5)) / (8 * sin2 ** 2)
    a = math.sqrt(1 - t + u)
    b = math.sqrt(1 + t + u)
    g = 1 / (math.sqrt(3) * sin2)
    c = 2 * math.sin(0.5 * math.acos(g) + 0.5 * math.atan(0.5))
    d = 2 * math.sin(0.5 * math.asin(g) + 0.5 * (math.pi / 2 - math.atan(0.5)))  # arccot(1/2)
    e1 = 1 / sin2
    e2 = math.sqrt(4 * sin2 ** 2 - 1) / sin2
    q = Fraction(1, 26)
    p = Fraction(2, 143)
    return (Term(q, 1 / a, Fraction(1)), Term(q, 1 / b, Fraction(1)),
            Term(q, 1 / c, Fraction(1)), Term(q, 1 / d, Fraction(1)),
            Term(-5 * p, 1 / e1, Fraction(1)), Term(-5 * p, 1 / e2, Fraction(1)),
            Term(-p, 0.5, Fraction(1)))


def ddv12_upper_bound(s: float) -> float:
    """Explicit upper bound on the N = 12 second difference.

    Built from the icosahedron with one vertex removed and with one face
    center added; positive for every s > -2.
    """
    if not s > -2:
        raise DomainError("needs s > -2")
    return eval_terms(_ddv12_terms(), s)


def ddv12_trial_value(s: float) -> float:
    """Same bound from direct sums over the two trial configurations."""
    ico = realize(NamedShape("icosahedron"))
    minus = ico[1:]
    plus = np.vstack([ico, icosahedron_face_center()])
    return (average_pair_energy(s, minus) - 2 * average_pair_energy(s, ico)
            + average_pair_energy(s, plus))


# ---------------------------------------------------------------- critical exponents


def find_critical_s(target: str, tol: float = 1e-10, n: int | None = None) -> float:
    """Critical exponents: ``s1_of_3``, ``s1_of_4``, ``s1_of_6``, ``s_dagger``, ``s3_crossover``.

    The s1 values are the smallest zeros of the N = 3, 4, 6 second-difference
    formulas on (-2, 10], (-2, 2) and (-2, 0] respectively. For N = 6 the
    formula is continued below its validity window, where it remains an upper
    bound on the true second difference.
    """
    lo = -2.0 + 1e-9
    if target == "s1_of_3":
        return find_root(lambda s: eval_terms(DDV_TERMS[3], s), lo, 10.0, tol, grid=240)
    if target == "s1_of_4":
        return find_root(lambda s: eval_terms(DDV_TERMS[4], s), lo, 2.0, tol, grid=160)
    if target == "s1_of_6":
        return find_root(lambda s: eval_terms(DDV_TERMS[6], s), lo, 0.0, tol, grid=200)
    if target == "s_dagger":
        return find_root(lambda s: bipyramid_energy(s) - square_pyramid_energy(s), 14.0, 16.0, tol)
    if target == "s3_crossover":
        return s3_crossover(3 if n is None else n, tol)
    raise DomainError(f"unknown target {target!r}")


# ---------------------------------------------------------------- certificate


def _pochhammer(a: Fraction, k: int) -> Fraction:
    p = Fraction(1)
    for i in range(k):
        p *= a + i
    return p


def sqrt_one_minus_lower(x: Fraction, k_terms: int) -> Fraction:
    """Rational lower bound for (1 - x)^(1/2), 0 < x < 1."""
    head = sum(_pochhammer(Fraction(-1, 2), k) / math.factorial(k) * x ** k for k in range(k_terms))
    return head - _pochhammer(Fraction(1, 2), k_terms - 1) / math.factorial(k_terms - 1) * x ** k_terms


def sqrt_one_plus_upper(x: Fraction, k_terms: int) -> Fraction:
    """Rational upper bound for (1 + x)^(1/2) from the alternating binomial series (even K)."""
    if k_terms % 2:
        raise DomainError("the truncated alternating series is an upper bound only for even K")
    return 1 + sum(_pochhammer(Fraction(-1, 2), k) / math.factorial(k) * (-1) ** k * x ** k
                   for k in range(1, k_terms))


def rational_positivity_certificate(k_terms: int = 20) -> Fraction:
    """Certified rational lower bound on the N = 4 second difference at s = 1.

    The value is 1/20 + (13/10)(1/3)^(1/2) + (3/5)(1/2)^(1/2) - (3/2)^(1/2),
    with each square root replaced by a truncated binomial bound.
    """
    return (Fraction(1, 20) + Fraction(13, 10) * sqrt_one_minus_lower(Fraction(2, 3), k_terms)
            + Fraction(3, 5) * sqrt_one_minus_lower(Fraction(1, 2), k_terms)
            - sqrt_one_plus_upper(Fraction(1, 2), k_terms))


# ---------------------------------------------------------------- seeds for the minimizer


def shapes_for(n: int, s: float) -> list[NamedShape]:
    """All named shapes with N points; square pyramids use the critical height at s."""
    out = [NamedShape(k) for k, m in _SHAPE_SIZES.items() if m == n and k != "square_pyramid"]
    if n == 5:
        z = square_pyramid_height(s) if s > -2 else -0.25
        if -1 < z < 0:
            out.append(NamedShape("square_pyramid", z))
    return out
