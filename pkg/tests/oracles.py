"""Independent reference computations used by the tests.

These are deliberately naive: scalar loops, the textbook kernel and
arbitrary precision where it matters.
"""

from __future__ import annotations

import itertools
import math

import mpmath
import numpy as np


def kernel(s: float, r: float) -> float:
    """V_s(r) in arbitrary precision."""
    with mpmath.workdps(40):
        r = mpmath.mpf(r)
        if abs(s) < 1e-30:
            return float(-mpmath.log(r))
        return float((r ** (-mpmath.mpf(s)) - 1) / s)


def brute_energy(s: float, pts) -> float:
    pts = [tuple(map(float, p)) for p in pts]
    tot, cnt = 0.0, 0
    for p, q in itertools.combinations(pts, 2):
        tot += kernel(s, math.dist(p, q))
        cnt += 1
    return tot / cnt


def octahedron():
    return np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1.0]])


def tetrahedron():
    return np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1.0]]) / math.sqrt(3)


def triangle():
    a = 2 * math.pi / 3
    return np.array([[math.cos(k * a), math.sin(k * a), 0.0] for k in range(3)])


def icosahedron():
    """Vertices of the icosahedron from cyclic permutations of (0, +-1, +-phi)."""
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for a in (-1, 1):
        for b in (-phi, phi):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    x = np.array(pts, dtype=float)
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def antipodal():
    return np.array([[0, 0, 1.0], [0, 0, -1.0]])


UNIVERSAL = {2: antipodal, 3: triangle, 4: tetrahedron, 6: octahedron, 12: icosahedron}


def random_points(rng, n):
    x = rng.standard_normal((n, 3))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def lattice_zeta_hex(s: float, radius: float, tail: bool = True) -> float:
    """Brute-force sum of |z|^-s over nonzero unit-spaced hexagonal lattice points with |z| <= radius.

    With ``tail`` the continuum estimate (2 pi / A) R^(2-s)/(s-2) of the
    omitted points (A = sqrt3/2 is the cell area) is added.
    """
    kb = int(radius / (math.sqrt(3) / 2)) + 2
    ka = int(radius) + kb + 2
    a, b = np.meshgrid(np.arange(-ka, ka + 1), np.arange(-kb, kb + 1))
    r2 = (a + 0.5 * b) ** 2 + 0.75 * b ** 2
    r2 = r2[(r2 > 0) & (r2 <= radius ** 2)]
    out = float(np.sum(r2 ** (-s / 2)))
    if tail:
        out += 2 * math.pi / (math.sqrt(3) / 2) * radius ** (2 - s) / (s - 2)
    return out


def radical_inverse(i: int) -> float:
    out, f = 0.0, 0.5
    while i:
        if i & 1:
            out += f
        i >>= 1
        f /= 2
    return out
