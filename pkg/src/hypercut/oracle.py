"""Brute-force ground truth for the cutsize distribution.

Counts bipartitions of concrete instances by enumerating all 2^m labeled
vertex assignments, averages those counts over every socket permutation of
an ensemble (exactly, in rationals), and estimates the same table by Monte
Carlo with standard errors.  The exhaustive average must equal the
generating-function table cell for cell; that equality is the main
correctness gate for both sides.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .core import DEFAULT_ENUM_CAP, CapExceeded, Hypergraph
from .ensemble import EnsembleParams, enumerate_all, sample_with_rng
from .exact_distribution import CutsizeTable


def count_bipartitions(h: Hypergraph,
                       cap: int = DEFAULT_ENUM_CAP) -> dict[tuple[int, int], int]:
    """Histogram (cutsize, |U1|) -> count over all 2^m labeled assignments.

    Every assignment is counted, including the two with an empty part
    (binned at |U1| = 0 and |U1| = m), so the counts always total 2^m.
    """
    m = h.vertex_count
    if 1 << m > cap:
        raise CapExceeded(f"2^{m} assignments exceed cap {cap}")
    masks = h.support_masks
    full = (1 << m) - 1
    counts: dict[tuple[int, int], int] = {}
    for x in range(1 << m):
        inv = x ^ full
        s = 0
        for mk in masks:
            if (mk & x) and (mk & inv):
                s += 1
        key = (s, x.bit_count())
        counts[key] = counts.get(key, 0) + 1
    return counts


def exact_ensemble_average(params: EnsembleParams,
                           cap: int = DEFAULT_ENUM_CAP) -> CutsizeTable:
    """Average ``count_bipartitions`` over all xi! socket permutations.

    Exact rational table on the full (s, m1) grid; the structural
    identities are verified on construction.
    """
    totals: dict[tuple[int, int], int] = {}
    for h in enumerate_all(params, cap=cap):
        for key, c in count_bipartitions(h, cap=cap).items():
            totals[key] = totals.get(key, 0) + c
    fact = math.factorial(params.xi)
    cells = {(s, m1): Fraction(totals.get((s, m1), 0), fact)
             for s in range(params.n + 1) for m1 in range(params.m + 1)}
    table = CutsizeTable(params, cells)
    table.validate()
    return table


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Per-cell sample mean and standard error of the bipartition counts."""

    params: EnsembleParams
    samples: int
    seed: int
    mean: np.ndarray    # shape (n+1, m+1)
    stderr: np.ndarray  # shape (n+1, m+1)


def monte_carlo_average(params: EnsembleParams, samples: int, seed: int,
                        cap: int = DEFAULT_ENUM_CAP) -> MonteCarloEstimate:
    """Estimate the cutsize table from independent sampled instances.

    Accumulation is exact integer arithmetic; mean and standard error of
    the mean are computed at the end.  Reproducible: one RNG stream is
    seeded once and drawn sequentially.
    """
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    if 1 << params.m > cap:
        raise CapExceeded(f"2^{params.m} assignments exceed cap {cap}")
    rng = random.Random(seed)
    sums: dict[tuple[int, int], int] = {}
    sumsq: dict[tuple[int, int], int] = {}
    for _ in range(samples):
        h = sample_with_rng(params, rng)
        for key, c in count_bipartitions(h, cap=cap).items():
            sums[key] = sums.get(key, 0) + c
            sumsq[key] = sumsq.get(key, 0) + c * c

    mean = np.zeros((params.n + 1, params.m + 1))
    stderr = np.zeros((params.n + 1, params.m + 1))
    for (s, m1), tot in sums.items():
        mean[s, m1] = tot / samples
        if samples > 1:
            # N*sum(x^2) - (sum x)^2 = N*(N-1)*sample variance, exact ints.
            var_num = samples * sumsq[(s, m1)] - tot * tot
            stderr[s, m1] = math.sqrt(var_num) / (samples *
                                                  math.sqrt(samples - 1))
    return MonteCarloEstimate(params, samples, seed, mean, stderr)


def write_estimate_csv(est: MonteCarloEstimate, path: str | Path,
                       suppress_zeros: bool = False) -> int:
    """CSV rows ``s,m1,mean,stderr`` (floats, 10 significant digits)."""
    lines = ["s,m1,mean,stderr"]
    for s in range(est.params.n + 1):
        for m1 in range(est.params.m + 1):
            if suppress_zeros and est.mean[s, m1] == 0:
                continue
            lines.append(f"{s},{m1},{est.mean[s, m1]:.10g},"
                         f"{est.stderr[s, m1]:.10g}")
    Path(path).write_text("\n".join(lines) + "\n")
    return len(lines) - 1
