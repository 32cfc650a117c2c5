"""Multi-start Riemannian descent for minimal average standardized energies.

Restarts are run as a batch: every array carries a leading restart axis and
each restart has its own step size and line search, so the path of a
restart does not depend on which other restarts share its batch (up to the
last-bit rounding of batched BLAS reductions).

The descent is projected gradient with a retraction (step in the tangent
direction, then renormalize). The first ``bb_after`` iterations use Armijo
backtracking from a growing step; afterwards the trial step is the
Barzilai-Borwein (two-point secant) step, still safeguarded by Armijo. Once
the predicted decrease falls below rounding, a step is accepted when it shrinks
the gradient and changes the energy by at most a few ulps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .core import average_pair_energy, batch_energy_gradient, normalize
from .errors import DomainError, NumericError, UnsupportedRangeError
from .exact import (antipodal_arrangement_energy, realize, shapes_for,
                    triangle_arrangement_energy, v_minus_two, v_subcritical_even)
from .tables import EnergyTable

COLLISION_DISTANCE = 1e-9
TIE_TOLERANCE = 1e-12
DISTINCT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class MinimizeOptions:
    restarts: int | None = None       # default max(64, 8 N)
    seed: int = 0
    grad_tol: float = 1e-9
    max_iters: int = 20000
    polish_tol: float | None = 1e-13
    bb_after: int = 50
    batch_size: int = 512
    record_history: bool = False

    def __post_init__(self):
        if self.restarts is not None and self.restarts < 1:
            raise DomainError("restarts must be at least 1")
        if not self.grad_tol > 0:
            raise DomainError("grad_tol must be positive")

    def restart_budget(self, n: int) -> int:
        return self.restarts if self.restarts is not None else max(64, 8 * n)


@dataclass
class MinimizeResult:
    config: np.ndarray
    energy: float
    grad_norm: float
    iterations: int
    restart_index: int
    converged: bool = False
    status: str = "ok"            # ok | max_iters | stalled | collision | analytic
    history: list[float] | None = None


@dataclass
class PoolSummary:
    starts: int
    aborted: int
    distinct_energies: int
    energies: list[float] = field(default_factory=list)


def random_config(n: int, seed) -> np.ndarray:
    """n i.i.d. uniform points on the sphere (normalized Gaussians), deterministic in ``seed``."""
    if n < 2:
        raise DomainError("n must be at least 2")
    rng = np.random.default_rng(seed)
    return normalize(rng.standard_normal((n, 3)))


def _descend(s: float, starts: np.ndarray, opts: MinimizeOptions,
             first_index: int = 0) -> list[MinimizeResult]:
    """Batched descent; starts has shape (R, N, 3)."""
    x = normalize(starts)
    r_count, n, _ = x.shape
    check_collision = s >= 0
    e, g, min_d = batch_energy_gradient(s, x)
    gn2 = np.sum(g * g, axis=(1, 2))
    active = np.isfinite(e)
    status = np.where(active, "ok", "collision").astype(object)
    iters = np.zeros(r_count, dtype=int)
    step = np.full(r_count, 0.1) / np.maximum(np.sqrt(gn2), 1e-300)
    prev_x = np.zeros_like(x)
    prev_g = np.zeros_like(g)
    history = [[float(v)] for v in e] if opts.record_history else None
    eps_scale = 4 * np.finfo(float).eps

    for it in range(opts.max_iters):
        active &= np.sqrt(gn2) > opts.grad_tol
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        if it >= opts.bb_after:
            dx = x[idx] - prev_x[idx]
            dg = g[idx] - prev_g[idx]
            sy = np.sum(dx * dg, axis=(1, 2))
            ss = np.sum(dx * dx, axis=(1, 2))
            bb = np.where(sy > 0, ss / np.where(sy > 0, sy, 1.0), step[idx] * 2)
            t = np.minimum(bb, 1e3 * step[idx] + 1e-300) if it > opts.bb_after else bb
        else:
            t = step[idx] * 2.0
        t = np.minimum(t, 1.0 / np.sqrt(gn2[idx]))  # never move a point more than ~1 radian
        pending = np.ones(len(idx), dtype=bool)
        new_x = x[idx].copy()
        new_e = e[idx].copy()
        new_g = g[idx].copy()
        new_d = min_d[idx].copy()
        for _ in range(60):
            p = np.nonzero(pending)[0]
            if len(p) == 0:
                break
            k = idx[p]
            trial = normalize(x[k] - t[p, None, None] * g[k])
            te, tg, td = batch_energy_gradient(s, trial)
            drop = e[k] - te
            scale = np.maximum(1.0, np.abs(e[k]))
            armijo = drop >= 1e-4 * t[p] * gn2[k]
            # When the predicted decrease is below rounding, energy differences carry no
            # information; accept a step that shrinks the gradient and keeps the energy
            # within a few ulps.
            tiny = t[p] * gn2[k] <= 1e-10 * scale
            flat = (drop >= -eps_scale * scale) & (np.sum(tg * tg, axis=(1, 2)) < gn2[k])
            ok = np.isfinite(te) & (armijo | (tiny & flat))
            if check_collision:
                ok &= td >= COLLISION_DISTANCE
            acc = p[ok]
            new_x[acc], new_e[acc], new_g[acc], new_d[acc] = trial[ok], te[ok], tg[ok], td[ok]
            pending[acc] = False
            t[p[~ok]] *= 0.5
        stalled = idx[pending]
        status[stalled] = "stalled"
        active[stalled] = False
        moved = idx[~pending]
        prev_x[moved] = x[moved]
        prev_g[moved] = g[moved]
        sub = ~pending
        x[moved], e[moved], g[moved], min_d[moved] = new_x[sub], new_e[sub], new_g[sub], new_d[sub]
        step[moved] = t[sub]
        gn2[moved] = np.sum(g[moved] * g[moved], axis=(1, 2))
        iters[moved] += 1
        if history is not None:
            for m in moved:
                history[m].append(float(e[m]))
    gnorm = np.sqrt(gn2)
    out = []
    for i in range(r_count):
        st = status[i]
        conv = bool(gnorm[i] <= opts.grad_tol) and st != "collision"
        if st == "ok" and not conv:
            st = "max_iters"
        out.append(MinimizeResult(x[i].copy(), float(e[i]), float(gnorm[i]), int(iters[i]),
                                  first_index + i, conv, st,
                                  history[i] if history is not None else None))
    return out


def local_minimize(s: float, start, opts: MinimizeOptions = MinimizeOptions(),
                   restart_index: int = 0) -> MinimizeResult:
    """Descend from one start until the tangent gradient norm is below ``opts.grad_tol``."""
    if not s > -2:
        raise UnsupportedRangeError("iterative descent needs s > -2 (use the analytic lanes)")
    x = np.asarray(start, dtype=float)
    return _descend(float(s), x[None], opts, restart_index)[0]


def _lift(prev: np.ndarray, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.vstack([prev, normalize(rng.standard_normal((1, 3)))])


def _analytic(s: float, n: int) -> MinimizeResult:
    """Closed-form answers at and below s = -2 (no iterative search)."""
    if s == -2:
        # any configuration with vanishing center of mass is optimal
        if n % 2 == 0:
            cfg = np.array([[0, 0, 1.0], [0, 0, -1.0]] * (n // 2))
        else:
            tri = realize_tri()
            cfg = np.vstack([tri] + [np.array([[0, 0, 1.0], [0, 0, -1.0]])] * ((n - 3) // 2))
        return MinimizeResult(cfg, v_minus_two(n), 0.0, 0, 0, True, "analytic")
    if n % 2 == 0:
        cfg = np.array([[0, 0, 1.0]] * (n // 2) + [[0, 0, -1.0]] * (n // 2))
        return MinimizeResult(cfg, v_subcritical_even(s, n), 0.0, 0, 0, True, "analytic")
    if n == 3:
        a = antipodal_arrangement_energy(s, 3)
        t = triangle_arrangement_energy(s, 3)
        if a < t:
            cfg = np.array([[0, 0, 1.0], [0, 0, 1.0], [0, 0, -1.0]])
            return MinimizeResult(cfg, a, 0.0, 0, 0, True, "analytic")
        return MinimizeResult(realize_tri(), t, 0.0, 0, 0, True, "analytic")
    raise UnsupportedRangeError("odd N > 3 below s = -2 has no known optimizer")


def realize_tri() -> np.ndarray:
    from .exact import NamedShape
    return realize(NamedShape("equilateral_triangle"))


def multi_start(s: float, n: int, opts: MinimizeOptions = MinimizeOptions(),
                warm_starts: list[np.ndarray] | None = None) -> tuple[MinimizeResult, PoolSummary]:
    """Best of many local descents, with deterministic tie-breaking and a final polish.

    Starts, in restart-index order: every named shape with N points, the warm
    starts (e.g. the N-1 optimum with one random point appended), then
    ``opts.restart_budget(n)`` random configurations.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    if s <= -2:
        res = _analytic(float(s), n)
        return res, PoolSummary(1, 0, 1, [res.energy])
    starts = [realize(sh) for sh in shapes_for(n, s)]
    starts += [np.asarray(w, dtype=float) for w in (warm_starts or [])]
    budget = opts.restart_budget(n)
    starts += [random_config(n, [opts.seed, n, k]) for k in range(budget)]
    stack = np.stack(starts)
    results: list[MinimizeResult] = []
    for b in range(0, len(stack), opts.batch_size):
        results += _descend(float(s), stack[b:b + opts.batch_size], opts, b)
    good = [r for r in results if r.status != "collision" and math.isfinite(r.energy)]
    if not good:
        raise NumericError(f"all {len(results)} restarts failed at N={n}, s={s}")
    best = good[0]
    for r in good[1:]:
        if r.energy < best.energy - TIE_TOLERANCE:
            best = r
    if opts.polish_tol is not None and opts.polish_tol < opts.grad_tol:
        polished = _descend(float(s), best.config[None],
                            replace(opts, grad_tol=opts.polish_tol, record_history=False),
                            best.restart_index)[0]
        if polished.energy <= best.energy:
            polished.iterations += best.iterations
            polished.converged = polished.converged or best.converged
            if polished.status in ("stalled", "max_iters") and best.converged:
                polished.status = "ok"
            best = polished
    energies = sorted(r.energy for r in good)
    distinct = 1 + sum(1 for a, b in zip(energies, energies[1:]) if b - a > DISTINCT_TOLERANCE)
    pool = PoolSummary(len(results), len(results) - len(good), distinct, energies)
    return best, pool


def scan(s: float, n_lo: int, n_hi: int, opts: MinimizeOptions = MinimizeOptions(),
         progress=None) -> tuple[EnergyTable, dict[int, MinimizeResult]]:
    """Best multi-start energy for every N in [n_lo, n_hi].

    Each N is warm-started from the N-1 winner with one random point added.
    Failed rows carry NaN and a ``failed:`` provenance.
    """
    if not 2 <= n_lo <= n_hi:
        raise DomainError("need 2 <= n_lo <= n_hi")
    table = EnergyTable(float(s))
    best: dict[int, MinimizeResult] = {}
    prev = None
    for n in range(n_lo, n_hi + 1):
        warm = [_lift(prev, [opts.seed, n, 10 ** 6])] if prev is not None else None
        try:
            res, _ = multi_start(s, n, opts, warm)
        except (NumericError, UnsupportedRangeError) as exc:
            table.rows[n] = (math.nan, f"failed: {exc}")
            prev = None
            continue
        if res.status == "analytic":
            prov = "analytic"
        else:
            prov = f"computed({opts.seed},{opts.restart_budget(n)})"
        table.rows[n] = (res.energy, prov)
        best[n] = res
        prev = res.config
        if progress is not None:
            progress(n, res)
    return table, best


def direct_energy(s: float, c) -> float:
    """Convenience re-evaluation of a result's energy."""
    return average_pair_energy(s, c)
