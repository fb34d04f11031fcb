"""Growth rates of bipartition counts and typical minimum cutsizes.

As n grows with delta*m = gamma*n, the expected number of bipartitions with
cutsize sigma*n and first-part size mu1*m behaves like 2^(n*g(sigma, mu1))
where

    g(sigma, mu1) = H2(sigma) - gamma*(delta-1)/delta * H2(mu1)
                    + inf_{u>0} [ sigma*log2 p(u) + (1-sigma)*log2 q(u)
                                  - mu1*gamma*log2 u ]

with p(u) = (1+u)^gamma - 1 - u^gamma and q(u) = 1 + u^gamma.  The balanced
rate h(sigma, eps) maximizes g over mu1 in [(1-eps)/2, (1+eps)/2].  The
typical minimum cutsize is the first sigma where the rate turns positive:
below it, balanced bipartitions of that cutsize are exponentially rare.

All logarithms are base 2.  The inner infimum is smooth and convex in
t = ln u, so it is located by geometric bracketing plus bisection on the
derivative; every routine here is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

_LN2 = math.log(2.0)
_NEG_INF = float("-inf")

#: |t| beyond which p and q are evaluated by their leading-term series.
_TAIL = 600.0


@dataclass(frozen=True)
class GrowthPoint:
    """One growth-rate sample.

    ``mu1`` is the relative first-part size for fixed-part rates and the
    imbalance eps for balanced-rate curves.  ``u_star`` is the inner
    minimizer when it is attained at finite u, else None.
    """

    sigma: float
    mu1: float
    value: float
    u_star: float | None


@dataclass(frozen=True)
class VerdictRow:
    """Design rate vs. typical minimum cutsize for one (gamma, delta)."""

    gamma: int
    delta: int
    design_rate: float
    beta_star: float
    satisfied: bool
    margin: float

    def __post_init__(self):
        if self.satisfied != (self.margin >= 0):
            raise ValueError("satisfied flag inconsistent with margin")


def _degrees(ensemble) -> tuple[int, int]:
    if isinstance(ensemble, (tuple, list)):
        gamma, delta = ensemble
    else:
        gamma, delta = ensemble.gamma, ensemble.delta
    gamma, delta = int(gamma), int(delta)
    if gamma < 1 or delta < 1:
        raise ValueError("gamma and delta must be at least 1")
    return gamma, delta


def binary_entropy(x: float) -> float:
    """H2(x) = -x log2 x - (1-x) log2 (1-x), with H2(0) = H2(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy needs x in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _log2_p(t: float, gamma: int) -> float:
    """log2 of p(e^t) with p(u) = (1+u)^gamma - 1 - u^gamma, gamma >= 2."""
    if t <= 0.0:
        if t < -_TAIL:
            return math.log2(gamma) + t / _LN2  # p ~ gamma*u
        u = math.exp(t)
        return math.log2(math.expm1(gamma * math.log1p(u)) - u ** gamma)
    if t > _TAIL:
        return math.log2(gamma) + (gamma - 1) * t / _LN2  # p ~ gamma*u^(g-1)
    w = math.exp(-t)
    inner = math.expm1(gamma * math.log1p(w)) - w ** gamma
    return gamma * t / _LN2 + math.log2(inner)


def _log2_q(t: float, gamma: int) -> float:
    """log2 of q(e^t) = log2(1 + e^(gamma*t))."""
    gt = gamma * t
    if gt <= 0.0:
        return math.log1p(math.exp(gt)) / _LN2
    return gt / _LN2 + math.log1p(math.exp(-gt)) / _LN2


def _ratio_p(t: float, gamma: int) -> float:
    """u p'(u)/p(u) at u = e^t; moves from 1 to gamma-1 as t grows."""
    if t <= 0.0:
        if t < -_TAIL:
            return 1.0
        u = math.exp(t)
        num = gamma * u * ((1.0 + u) ** (gamma - 1) - u ** (gamma - 1))
        den = math.expm1(gamma * math.log1p(u)) - u ** gamma
        return num / den
    if t > _TAIL:
        return gamma - 1.0
    w = math.exp(-t)
    num = gamma * math.expm1((gamma - 1) * math.log1p(w))
    den = math.expm1(gamma * math.log1p(w)) - w ** gamma
    return num / den


def _ratio_q(t: float, gamma: int) -> float:
    """u q'(u)/q(u) = gamma / (1 + u^-gamma)."""
    gt = gamma * t
    if gt <= 0.0:
        e = math.exp(gt)
        return gamma * e / (1.0 + e)
    return gamma / (1.0 + math.exp(-gt))


def inner_infimum(sigma: float, mu1: float, gamma: int, *,
                  slope_tol: float = 1e-12) -> tuple[float, float]:
    """Minimize sigma*log2 p(u) + (1-sigma)*log2 q(u) - mu1*gamma*log2 u.

    Requires 0 < sigma < gamma*min(mu1, 1-mu1) strictly, which makes the
    objective coercive in t = ln u with a unique interior stationary point
    (it is convex in t).  The point is bracketed by geometric expansion and
    polished by bisection on the derivative until |phi'| < ``slope_tol``
    bits.  Returns (u_star, value in bits).
    """
    if gamma < 2:
        raise ValueError("inner infimum needs gamma >= 2")
    if not (0.0 < sigma < gamma * min(mu1, 1.0 - mu1)):
        raise ValueError(f"need 0 < sigma < gamma*min(mu1, 1-mu1): "
                         f"sigma={sigma}, mu1={mu1}, gamma={gamma}")

    def dphi(t: float) -> float:  # derivative of the objective, in bits
        return (sigma * _ratio_p(t, gamma) + (1.0 - sigma) * _ratio_q(t, gamma)
                - mu1 * gamma) / _LN2

    def phi(t: float) -> float:
        return (sigma * _log2_p(t, gamma) + (1.0 - sigma) * _log2_q(t, gamma)
                - mu1 * gamma * t / _LN2)

    t_star = None
    d0 = dphi(0.0)
    if abs(d0) < slope_tol:
        t_star = 0.0
    elif d0 > 0.0:
        hi = 0.0
        lo, step = -1.0, -1.0
        while (dlo := dphi(lo)) >= 0.0:
            if abs(dlo) < slope_tol:
                t_star = lo
                break
            step *= 2.0
            lo += step
            if lo < -2.0 ** 40:
                raise RuntimeError(f"bracketing ran away: lo={lo}, "
                                   f"dphi(lo)={dlo}")
    else:
        lo = 0.0
        hi, step = 1.0, 1.0
        while (dhi := dphi(hi)) <= 0.0:
            if abs(dhi) < slope_tol:
                t_star = hi
                break
            step *= 2.0
            hi += step
            if hi > 2.0 ** 40:
                raise RuntimeError(f"bracketing ran away: hi={hi}, "
                                   f"dphi(hi)={dhi}")

    if t_star is None:
        # dphi(lo) < 0 < dphi(hi); dphi is nondecreasing, so bisect it.
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            dm = dphi(mid)
            if abs(dm) < slope_tol:
                t_star = mid
                break
            if dm > 0.0:
                hi = mid
            else:
                lo = mid
            if hi - lo <= 1e-16 * max(1.0, abs(lo), abs(hi)):
                break
        if t_star is None:
            t_star = 0.5 * (lo + hi)
            if abs(dphi(t_star)) >= slope_tol:
                raise RuntimeError(
                    f"stationarity refinement stalled: bracket "
                    f"[{lo}, {hi}], slope {dphi(t_star)}")
    return math.exp(t_star), phi(t_star)


def growth_rate(sigma: float, mu1: float, ensemble) -> GrowthPoint:
    """Growth rate at fixed relative cutsize sigma and part size mu1.

    Finite only for sigma <= gamma*min(mu1, 1-mu1); on that boundary the
    infimum escapes to u -> 0 or infinity but its limit value sigma*log2(gamma)
    is exact, reported with ``u_star = None``.  sigma = 0 uses the closed
    form (1 - gamma*(delta-1)/delta) * H2(mu1).
    """
    gamma, delta = _degrees(ensemble)
    if not 0.0 <= sigma <= 1.0:
        raise ValueError(f"sigma must lie in [0, 1], got {sigma}")
    if not 0.0 <= mu1 <= 1.0:
        raise ValueError(f"mu1 must lie in [0, 1], got {mu1}")
    ent_factor = gamma * (delta - 1) / delta

    if sigma == 0.0:
        value = (1.0 - ent_factor) * binary_entropy(mu1)
        u0 = (mu1 / (1.0 - mu1)) ** (1.0 / gamma) if 0.0 < mu1 < 1.0 else None
        return GrowthPoint(sigma, mu1, value, u0)

    limit = gamma * min(mu1, 1.0 - mu1)
    if gamma == 1 or sigma > limit:
        return GrowthPoint(sigma, mu1, _NEG_INF, None)
    if sigma == limit:
        value = (binary_entropy(sigma) - ent_factor * binary_entropy(mu1)
                 + sigma * math.log2(gamma))
        return GrowthPoint(sigma, mu1, value, None)

    u_star, inf_val = inner_infimum(sigma, mu1, gamma)
    value = binary_entropy(sigma) - ent_factor * binary_entropy(mu1) + inf_val
    return GrowthPoint(sigma, mu1, value, u_star)


def _golden_max(f, lo: float, hi: float, iters: int = 90):
    """Golden-section maximization; returns the best (x, f(x)) probed."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(x1), f(x2)
    best = (x1, f1) if f1 >= f2 else (x2, f2)
    for _ in range(iters):
        if b - a < 1e-14:
            break
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
            if f2 > best[1]:
                best = (x2, f2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
            if f1 > best[1]:
                best = (x1, f1)
    return best


def balanced_growth_rate(sigma: float, epsilon: float, ensemble, *,
                         grid_points: int = 201) -> GrowthPoint:
    """Growth rate of eps-balanced bipartitions: max over allowed mu1.

    Unimodality in mu1 is not guaranteed, so the maximization is a coarse
    grid over [(1-eps)/2, (1+eps)/2] followed by golden-section refinement
    around the best grid point; the interval endpoints and 1/2 are always
    evaluated exactly as final candidates.  eps = 0 short-circuits to the
    single point mu1 = 1/2.  The returned point carries eps in its ``mu1``
    field.
    """
    if not 0.0 <= epsilon < 1.0:
        raise ValueError(f"epsilon must lie in [0, 1), got {epsilon}")
    if epsilon == 0.0:
        g = growth_rate(sigma, 0.5, ensemble)
        return GrowthPoint(sigma, 0.0, g.value, g.u_star)

    lo = (1.0 - epsilon) / 2.0
    hi = (1.0 + epsilon) / 2.0

    def val(mu: float) -> float:
        return growth_rate(sigma, mu, ensemble).value

    step = (hi - lo) / (grid_points - 1)
    grid = [lo + i * step for i in range(grid_points)]
    grid_vals = [val(mu) for mu in grid]
    i_best = max(range(grid_points), key=grid_vals.__getitem__)

    candidates = {lo: grid_vals[0], hi: grid_vals[-1],
                  grid[i_best]: grid_vals[i_best], 0.5: val(0.5)}
    if math.isfinite(grid_vals[i_best]):
        ref_lo = max(lo, grid[i_best] - step)
        ref_hi = min(hi, grid[i_best] + step)
        x, fx = _golden_max(val, ref_lo, ref_hi)
        candidates[x] = fx

    best_mu = max(candidates, key=candidates.__getitem__)
    best = growth_rate(sigma, best_mu, ensemble)
    return GrowthPoint(sigma, epsilon, best.value, best.u_star)


def balanced_growth_rate_closed(sigma: float, ensemble) -> float:
    """Closed form of the exactly balanced rate (mu1 = 1/2):

        H2(sigma) + sigma*log2(2^(gamma-1) - 1) - gamma*(delta-1)/delta + 1

    At mu1 = 1/2 the inner minimizer is u = 1 for every sigma, which
    collapses the infimum to the linear term above.  Needs gamma >= 2.
    """
    gamma, delta = _degrees(ensemble)
    if gamma < 2:
        raise ValueError("closed form needs gamma >= 2 (log of 2^(gamma-1)-1)")
    return (binary_entropy(sigma) + sigma * math.log2(2 ** (gamma - 1) - 1)
            - gamma * (delta - 1) / delta + 1.0)


def peak_sigma(mu1: float, gamma: int) -> float:
    """Relative cutsize maximizing the growth rate at fixed mu1."""
    if not 0.0 <= mu1 <= 1.0:
        raise ValueError(f"mu1 must lie in [0, 1], got {mu1}")
    return 1.0 - (1.0 - mu1) ** gamma - mu1 ** gamma


def peak_growth(mu1: float, ensemble) -> float:
    """Maximum of the growth rate over sigma: (gamma/delta) * H2(mu1)."""
    gamma, delta = _degrees(ensemble)
    return gamma / delta * binary_entropy(mu1)


def _first_positive(f, top: float, grid_step: float, tol: float,
                    what: str) -> float:
    """First sign change of f on (0, top], refined by bisection."""
    prev = 0.0
    sigma = grid_step
    grid: list[tuple[float, float]] = []
    bracket = None
    while True:
        sigma = min(sigma, top)
        v = f(sigma)
        grid.append((sigma, v))
        if v > 0.0:
            bracket = (prev, sigma)
            break
        prev = sigma
        if sigma >= top:
            break
        sigma += grid_step
    if bracket is None:
        err = RuntimeError(f"no sign change of {what} found on (0, {top}]; "
                           f"grid step {grid_step}, {len(grid)} points")
        err.grid = grid
        raise err
    lo, hi = bracket
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def typical_min_cutsize(epsilon: float, ensemble, *, grid_step: float = 1e-3,
                        tol: float = 1e-10) -> float:
    """Smallest relative cutsize where the balanced rate turns positive.

    Balanced bipartitions with smaller relative cutsize are exponentially
    rare.  The rate is scanned on a sigma grid up to its peak, taking the
    first crossing from below, then bisected to a ``tol``-wide interval.
    Needs gamma >= 2, delta >= 3 (the regime where the rate starts <= 0 and
    the peak is positive, so a root exists).
    """
    gamma, delta = _degrees(ensemble)
    if gamma < 2 or delta < 3:
        raise ValueError("typical minimum cutsize needs gamma >= 2, delta >= 3")
    top = peak_sigma(0.5, gamma)
    return _first_positive(
        lambda s: balanced_growth_rate(s, epsilon, ensemble).value,
        top, grid_step, tol, f"balanced rate (gamma={gamma}, delta={delta})")


def typical_min_cutsize_fixed_part(mu1: float, ensemble, *,
                                   grid_step: float = 1e-3,
                                   tol: float = 1e-10) -> float:
    """Like ``typical_min_cutsize`` but at fixed relative part size mu1."""
    gamma, delta = _degrees(ensemble)
    if gamma < 2 or delta < 3:
        raise ValueError("typical minimum cutsize needs gamma >= 2, delta >= 3")
    if not 0.0 < mu1 < 1.0:
        raise ValueError("mu1 must lie strictly inside (0, 1)")
    top = peak_sigma(mu1, gamma)
    return _first_positive(
        lambda s: growth_rate(s, mu1, ensemble).value,
        top, grid_step, tol, f"rate at mu1={mu1} (gamma={gamma}, delta={delta})")


def verdict(ensemble, epsilon: float = 0.0, **kwargs) -> VerdictRow:
    """Necessary condition for 2-way parallel encodability, typically.

    Compares the design rate 1 - gamma/delta against the typical minimum
    cutsize: when the design rate falls short, almost every instance of the
    ensemble fails the cutsize bound and cannot be block-diagonalized into
    two parallel systems.
    """
    gamma, delta = _degrees(ensemble)
    design_rate = 1.0 - gamma / delta
    beta = typical_min_cutsize(epsilon, (gamma, delta), **kwargs)
    margin = design_rate - beta
    return VerdictRow(gamma, delta, design_rate, beta, margin >= 0, margin)


def curve(ensemble, epsilon: float, sigma_grid: Iterable[float],
          **kwargs) -> list[GrowthPoint]:
    """Balanced growth rate sampled on a sigma grid (for plotting/CSV)."""
    points = []
    for s in sigma_grid:
        s = float(s)
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"sigma grid value {s} outside [0, 1]")
        points.append(balanced_growth_rate(s, epsilon, ensemble, **kwargs))
    return points


def write_curve_csv(points: Sequence[GrowthPoint], path: str | Path) -> None:
    lines = ["sigma,h"]
    lines += [f"{p.sigma:.10g},{p.value:.10g}" for p in points]
    Path(path).write_text("\n".join(lines) + "\n")


def write_verdict_csv(rows: Sequence[VerdictRow], path: str | Path) -> None:
    lines = ["gamma,delta,design_rate,beta_star,satisfied,margin"]
    lines += [f"{r.gamma},{r.delta},{r.design_rate:.10g},{r.beta_star:.10g},"
              f"{'true' if r.satisfied else 'false'},{r.margin:.10g}"
              for r in rows]
    Path(path).write_text("\n".join(lines) + "\n")
