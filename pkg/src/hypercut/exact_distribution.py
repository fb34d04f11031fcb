"""Exact finite-size cutsize distributions via generating functions.

For the regular ensemble E(n, gamma, delta), the expected number of labeled
bipartitions with cutsize s and first-part size m1 is

    avg(s, m1) = C(m, m1) * C(n, s) / C(delta*m, delta*m1)
                 * coef( p(u)^s * q(u)^(n-s), u^(delta*m1) )

with p(u) = (1+u)^gamma - 1 - u^gamma enumerating the active-socket patterns
of a cut net and q(u) = 1 + u^gamma those of an uncut one, and the value is
zero whenever s > delta*m1 or s > delta*(m - m1).  Everything here is exact:
polynomial coefficients are arbitrary-precision integers and table entries
are reduced rationals.  Floats appear only in the log2 evaluator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .core import CapExceeded, as_ratio
from .ensemble import EnsembleParams

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class PolyZ:
    """Dense univariate polynomial over the integers.

    ``coeffs[i]`` is the coefficient of u^i; trailing zeros are trimmed, so
    the zero polynomial has an empty tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __mul__(self, other: "PolyZ") -> "PolyZ":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyZ(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyZ(tuple(out))

    def __pow__(self, exponent: int) -> "PolyZ":
        """Power by repeated squaring; ``p**0`` is 1 even for p = 0."""
        if exponent < 0:
            raise ValueError("negative exponent")
        result = PolyZ((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def cut_node_poly(gamma: int) -> PolyZ:
    """(1+u)^gamma - 1 - u^gamma: active-socket patterns of a cut net.

    A degree-gamma net is cut iff it has between 1 and gamma-1 active
    sockets, hence coefficient C(gamma, j) at u^j for those j.  Identically
    zero for gamma = 1 (a single-vertex net is never cut).
    """
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    return PolyZ((0,) + tuple(math.comb(gamma, j) for j in range(1, gamma)))


def uncut_node_poly(gamma: int) -> PolyZ:
    """1 + u^gamma: an uncut net has 0 or gamma active sockets."""
    if gamma < 1:
        raise ValueError("gamma must be at least 1")
    return PolyZ((1,) + (0,) * (gamma - 1) + (1,))


def constellation_coeff(gamma: int, s: int, n: int, k: int) -> int:
    """Coefficient of u^k in cut_node_poly^s * uncut_node_poly^(n-s).

    Counts the ways to place k active sockets on n degree-gamma nets of
    which exactly the first s are cut.  Out-of-range k gives 0.
    """
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    if k < 0:
        return 0
    prod = cut_node_poly(gamma) ** s * uncut_node_poly(gamma) ** (n - s)
    return prod.coeff(k)


def expected_bipartitions(params: EnsembleParams, s: int, m1: int) -> Fraction:
    """Ensemble-average count of labeled bipartitions with cutsize s, |U1|=m1.

    Exact reduced rational.  Parts may be empty here (m1 in {0, m} is a
    legal index); balance filtering happens in the balanced variants.
    """
    n, m, g, d = params.n, params.m, params.gamma, params.delta
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}")
    if not 0 <= m1 <= m:
        raise ValueError(f"need 0 <= m1 <= m, got m1={m1}")
    if s > d * m1 or s > d * (m - m1):
        return Fraction(0)
    coef = constellation_coeff(g, s, n, d * m1)
    if coef == 0:
        return Fraction(0)
    return Fraction(math.comb(m, m1) * math.comb(n, s) * coef,
                    math.comb(d * m, d * m1))


def balanced_first_part_range(m: int, epsilon) -> tuple[int, int]:
    """Integer interval of |U1| allowed at imbalance eps (inclusive bounds).

    Lower bound rounds up, upper bound rounds down, so the range can be
    empty: odd m with eps = 0 admits no exactly balanced bipartition and
    yields (ceil(m/2), floor(m/2)).
    """
    eps = as_ratio(epsilon)
    if not 0 <= eps < 1:
        raise ValueError(f"need 0 <= eps < 1, got {eps}")
    half = Fraction(m, 2)
    return math.ceil(half * (1 - eps)), math.floor(half * (1 + eps))


def expected_balanced_bipartitions(params: EnsembleParams, s: int,
                                   epsilon) -> Fraction:
    """Sum of ``expected_bipartitions`` over the eps-balanced |U1| range."""
    lo, hi = balanced_first_part_range(params.m, epsilon)
    return sum((expected_bipartitions(params, s, m1)
                for m1 in range(max(lo, 0), min(hi, params.m) + 1)),
               start=Fraction(0))


@dataclass(frozen=True)
class CutsizeTable:
    """All exact values avg(s, m1) for s in [0, n], m1 in [0, m]."""

    params: EnsembleParams
    cells: Mapping[tuple[int, int], Fraction]

    def value(self, s: int, m1: int) -> Fraction:
        return self.cells[(s, m1)]

    def total(self) -> Fraction:
        return sum(self.cells.values(), start=Fraction(0))

    def row_sum(self, m1: int) -> Fraction:
        return sum((self.cells[(s, m1)] for s in range(self.params.n + 1)),
                   start=Fraction(0))

    def balanced_distribution(self, epsilon) -> dict[int, Fraction]:
        """Cutsize distribution of eps-balanced bipartitions, per s."""
        lo, hi = balanced_first_part_range(self.params.m, epsilon)
        lo, hi = max(lo, 0), min(hi, self.params.m)
        return {s: sum((self.cells[(s, m1)] for m1 in range(lo, hi + 1)),
                       start=Fraction(0))
                for s in range(self.params.n + 1)}

    def validate(self) -> None:
        """Check the structural identities every exact table must satisfy."""
        n, m, d = self.params.n, self.params.m, self.params.delta
        for (s, m1), val in self.cells.items():
            if val < 0:
                raise AssertionError(f"negative cell at {(s, m1)}")
            if (s > d * m1 or s > d * (m - m1)) and val != 0:
                raise AssertionError(f"support violated at {(s, m1)}")
            if val != self.cells[(s, m - m1)]:
                raise AssertionError(f"symmetry broken at {(s, m1)}")
        for m1 in range(m + 1):
            if self.row_sum(m1) != math.comb(m, m1):
                raise AssertionError(f"row sum at m1={m1} is not C(m, m1)")
        if self.total() != 2 ** m:
            raise AssertionError("table total is not 2^m")


def cutsize_table(params: EnsembleParams, max_n: int = 2000) -> CutsizeTable:
    """Exact table of avg(s, m1) for every cell; identities are verified.

    Reuses p^s across the s-loop and extracts the needed coefficients of
    p^s * q^(n-s) through the binomial expansion of q^(n-s) = (1+u^gamma)^(n-s),
    which gives the same integers as the repeated-squaring product at a
    fraction of the cost.
    """
    if params.n > max_n:
        raise CapExceeded(f"n = {params.n} exceeds the exact-table budget "
                          f"{max_n}")
    n, m, g, d = params.n, params.m, params.gamma, params.delta
    cut = cut_node_poly(g)
    denom = [math.comb(d * m, d * m1) for m1 in range(m + 1)]

    cells: dict[tuple[int, int], Fraction] = {}
    power = PolyZ((1,))
    for s in range(n + 1):
        if s > 0:
            power = power * cut
        pc = power.coeffs
        top = len(pc) - 1
        c_ns = math.comb(n, s)
        t = n - s
        for m1 in range(m + 1):
            if s > d * m1 or s > d * (m - m1):
                cells[(s, m1)] = Fraction(0)
                continue
            k = d * m1
            # coef(p^s q^t, u^k) = sum_r C(t, r) * coef(p^s, u^(k - g*r))
            r_lo = max(0, -(-(k - top) // g))
            r_hi = min(t, k // g)
            coef = sum(math.comb(t, r) * pc[k - g * r]
                       for r in range(r_lo, r_hi + 1))
            if coef:
                cells[(s, m1)] = Fraction(
                    math.comb(m, m1) * c_ns * coef, denom[m1])
            else:
                cells[(s, m1)] = Fraction(0)
    table = CutsizeTable(params, cells)
    table.validate()
    return table


def _log2_int(x: int) -> float:
    """log2 of a positive integer of any size."""
    nbits = x.bit_length()
    if nbits <= 960:
        return math.log2(x)
    shift = nbits - 64
    return math.log2(x >> shift) + shift


def _log2_comb(a: int, b: int) -> float:
    return (math.lgamma(a + 1) - math.lgamma(b + 1)
            - math.lgamma(a - b + 1)) / _LN2


def log2_expected_bipartitions(params: EnsembleParams, s: int,
                               m1: int) -> float:
    """log2 of ``expected_bipartitions`` without building the huge rational.

    Binomials go through log-gamma; the generating-function coefficient is
    still computed exactly and then reduced to its log.  Returns -inf when
    the support conditions fail or the coefficient vanishes.  Where both
    this and the exact path run, they agree to 1e-9 relative.
    """
    n, m, g, d = params.n, params.m, params.gamma, params.delta
    if s > d * m1 or s > d * (m - m1):
        return float("-inf")
    coef = constellation_coeff(g, s, n, d * m1)
    if coef == 0:
        return float("-inf")
    return (_log2_comb(m, m1) + _log2_comb(n, s) - _log2_comb(d * m, d * m1)
            + _log2_int(coef))


def write_table_csv(table: CutsizeTable, path: str | Path,
                    suppress_zeros: bool = False) -> int:
    """CSV rows ``s,m1,A_num,A_den`` (exact integers); returns the row count."""
    lines = ["s,m1,A_num,A_den"]
    n, m = table.params.n, table.params.m
    for s in range(n + 1):
        for m1 in range(m + 1):
            val = table.cells[(s, m1)]
            if suppress_zeros and val == 0:
                continue
            lines.append(f"{s},{m1},{val.numerator},{val.denominator}")
    Path(path).write_text("\n".join(lines) + "\n")
    return len(lines) - 1


def write_balanced_csv(table: CutsizeTable, epsilon, path: str | Path,
                       suppress_zeros: bool = False) -> int:
    """CSV rows ``s,B_num,B_den`` for the eps-balanced distribution."""
    dist = table.balanced_distribution(epsilon)
    lines = ["s,B_num,B_den"]
    for s in range(table.params.n + 1):
        val = dist[s]
        if suppress_zeros and val == 0:
            continue
        lines.append(f"{s},{val.numerator},{val.denominator}")
    Path(path).write_text("\n".join(lines) + "\n")
    return len(lines) - 1
