"""Sparse binary matrices, their hypergraph view, balanced partitions and cuts.

A binary m x n matrix is read as a hypergraph: row i becomes vertex u_i,
column j becomes net e_j containing the vertices of the column's support.
Partition quality is the cutsize: the number of nets touching two or more
parts.  A matrix admits a row/column permutation into K nonsingular diagonal
blocks (one per part, enabling K-way parallel back-substitution) only if some
eps-balanced K-way partition has cutsize at most n - m; the checkers here
decide per-partition feasibility exactly over GF(2) and search small
instances exhaustively.

Nets are stored socket-level as multisets (the configuration model produces
multigraphs); every connection test uses the support.  Partitions are
labeled: (U1, U2) and its swap are distinct objects.  Balance comparisons
are exact rational arithmetic, never floating point.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

#: Default ceiling on the number of enumerated items (assignments K^m,
#: socket permutations xi!, ...) accepted by exhaustive routines.
DEFAULT_ENUM_CAP = 1 << 24


class CapExceeded(ValueError):
    """An exhaustive enumeration would exceed its configured cap."""


def as_ratio(value: int | float | str | Fraction) -> Fraction:
    """Coerce an imbalance ratio to an exact ``Fraction``.

    Floats go through their shortest decimal representation, so ``0.2``
    means exactly 1/5 rather than the nearest binary double.  Strings are
    parsed directly (``"1/3"``, ``"0.05"``, ``"2e-2"`` all work).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"ratio must be finite, got {value!r}")
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a ratio")


@dataclass(frozen=True)
class BinaryMatrix:
    """Sparse m x n matrix over GF(2), stored as the set of 1-entries."""

    rows: int
    cols: int
    entries: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "entries", frozenset(self.entries))
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) out of bounds for "
                                 f"{self.rows} x {self.cols} matrix")

    @classmethod
    def from_dense(cls, array) -> "BinaryMatrix":
        """Build from a dense 0/1 array (any nonzero counts as 1)."""
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ValueError("dense input must be 2-dimensional")
        rows, cols = (int(d) for d in arr.shape)
        rr, cc = np.nonzero(arr)
        return cls(rows, cols, frozenset(zip(rr.tolist(), cc.tolist())))

    @classmethod
    def from_columns(cls, column_supports: Sequence[Iterable[int]],
                     rows: int) -> "BinaryMatrix":
        entries = {(r, j) for j, sup in enumerate(column_supports) for r in sup}
        return cls(rows, len(column_supports), frozenset(entries))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, c in self.entries:
            out[r, c] = 1
        return out

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(self.cols, self.rows,
                            frozenset((c, r) for r, c in self.entries))

    def row_masks(self) -> list[int]:
        """Rows as integers, bit c set iff entry (row, c) is 1."""
        masks = [0] * self.rows
        for r, c in self.entries:
            masks[r] |= 1 << c
        return masks

    def column_supports(self) -> list[frozenset[int]]:
        sups: list[set[int]] = [set() for _ in range(self.cols)]
        for r, c in self.entries:
            sups[c].add(r)
        return [frozenset(s) for s in sups]


@dataclass(frozen=True)
class Hypergraph:
    """m vertices and a list of nets, each a multiset of vertex indices.

    Multiplicity is kept (socket-level view); connection and cut tests use
    the deduplicated support.
    """

    vertex_count: int
    nets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = tuple(tuple(sorted(net)) for net in self.nets)
        object.__setattr__(self, "nets", norm)
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        for j, net in enumerate(norm):
            if not net:
                raise ValueError(f"net {j} is empty; nets must be non-empty")
            if net[0] < 0 or net[-1] >= self.vertex_count:
                raise ValueError(f"net {j} references a vertex out of range")

    @property
    def net_count(self) -> int:
        return len(self.nets)

    @cached_property
    def supports(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(net) for net in self.nets)

    @cached_property
    def support_masks(self) -> tuple[int, ...]:
        masks = []
        for sup in self.supports:
            m = 0
            for v in sup:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)


@dataclass(frozen=True)
class Partition:
    """Labeled K-way partition: one part label in [1, k] per vertex.

    Every part must be non-empty; a bipartition and its swap are distinct.
    """

    labels: tuple[int, ...]
    k: int | None = None

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("partition needs at least one vertex")
        k = self.k if self.k is not None else max(labels)
        object.__setattr__(self, "k", int(k))
        if self.k < 1:
            raise ValueError("part count must be at least 1")
        seen = set()
        for v, lab in enumerate(labels):
            if not 1 <= lab <= self.k:
                raise ValueError(f"vertex {v} has label {lab} outside [1, {self.k}]")
            seen.add(lab)
        if len(seen) != self.k:
            raise ValueError("parts must be non-empty")

    @property
    def size(self) -> int:
        return len(self.labels)

    def part_sizes(self) -> list[int]:
        sizes = [0] * self.k
        for lab in self.labels:
            sizes[lab - 1] += 1
        return sizes

    def members(self, part: int) -> tuple[int, ...]:
        return tuple(v for v, lab in enumerate(self.labels) if lab == part)


@dataclass(frozen=True)
class EncodabilityVerdict:
    """Result of the block-diagonalization feasibility check.

    ``feasible`` holds iff the partition is balanced and, for every part,
    the columns connecting only to that part span it over GF(2).  When
    feasible, ``row_order``/``col_order`` give a witness permutation pair
    that places one nonsingular block per part on the diagonal.
    """

    feasible: bool
    balanced: bool
    cutsize: int
    per_part_rank: tuple[tuple[int, int], ...]
    row_order: tuple[int, ...] | None = None
    col_order: tuple[int, ...] | None = None

    def __post_init__(self):
        full = self.balanced and all(r == s for s, r in self.per_part_rank)
        if self.feasible != full:
            raise ValueError("verdict inconsistent with its rank data")


def hypergraph_from_matrix(mat: BinaryMatrix) -> Hypergraph:
    """Column j of ``mat`` becomes net j; row i becomes vertex i.

    Rejects empty columns (nets must be non-empty).
    """
    sups = mat.column_supports()
    for j, sup in enumerate(sups):
        if not sup:
            raise ValueError(f"column {j} is empty; nets must be non-empty")
    return Hypergraph(mat.rows, tuple(tuple(sorted(s)) for s in sups))


def matrix_from_hypergraph(h: Hypergraph) -> BinaryMatrix:
    """Support-level incidence matrix: entry (i, j) = 1 iff u_i in e_j."""
    return BinaryMatrix.from_columns(h.supports, h.vertex_count)


def tanner_to_hypergraph(variable_degrees: Sequence[int],
                         check_degrees: Sequence[int],
                         edge_list: Iterable[tuple[int, int]]) -> Hypergraph:
    """Turn a Tanner (multi)graph into its hypergraph.

    Check node i becomes vertex i; variable node j becomes net j.  Parallel
    edges are kept as multiset multiplicity.  ``edge_list`` holds
    (variable, check) index pairs; per-node edge counts must match the
    declared degrees.
    """
    n = len(variable_degrees)
    m = len(check_degrees)
    nets: list[list[int]] = [[] for _ in range(n)]
    check_seen = [0] * m
    for v, c in edge_list:
        if not 0 <= v < n:
            raise ValueError(f"edge endpoint: variable {v} out of range")
        if not 0 <= c < m:
            raise ValueError(f"edge endpoint: check {c} out of range")
        nets[v].append(c)
        check_seen[c] += 1
    for j in range(n):
        if len(nets[j]) != variable_degrees[j]:
            raise ValueError(f"variable {j}: {len(nets[j])} edges but "
                             f"degree {variable_degrees[j]} declared")
    for i in range(m):
        if check_seen[i] != check_degrees[i]:
            raise ValueError(f"check {i}: {check_seen[i]} edges but "
                             f"degree {check_degrees[i]} declared")
    return Hypergraph(m, tuple(tuple(sorted(net)) for net in nets))


def cutsize(h: Hypergraph, p: Partition) -> int:
    """Number of nets whose support meets at least two parts."""
    if len(p.labels) != h.vertex_count:
        raise ValueError("partition does not cover the hypergraph's vertices")
    labels = p.labels
    cut = 0
    for sup in h.supports:
        it = iter(sup)
        first = labels[next(it)]
        if any(labels[v] != first for v in it):
            cut += 1
    return cut


def is_balanced(p: Partition, epsilon) -> bool:
    """max part size <= (m/K)(1+eps), compared in exact rationals."""
    eps = as_ratio(epsilon)
    if eps < 0:
        raise ValueError("imbalance ratio must be non-negative")
    bound = Fraction(p.size, p.k) * (1 + eps)
    return max(p.part_sizes()) <= bound


def _mask_rank(masks: Iterable[int]) -> int:
    """GF(2) rank of the row space spanned by integer bitmasks."""
    basis: dict[int, int] = {}
    for v in masks:
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                break
    return len(basis)


def gf2_rank(mat: BinaryMatrix) -> int:
    """Rank over GF(2) by elimination on bitmask rows."""
    return _mask_rank(mat.row_masks())


def check_block_diagonalizable(mat: BinaryMatrix, p: Partition,
                               epsilon) -> EncodabilityVerdict:
    """Decide whether ``p`` certifies K-way block-diagonal encodability.

    For each part, the candidate diagonal block must be built from columns
    exclusive to that part (connecting to none of the others); a square
    nonsingular block of size |U_i| exists iff those columns have GF(2)
    rank |U_i|.  Feasible additionally requires the partition to be
    eps-balanced.
    """
    if len(p.labels) != mat.rows:
        raise ValueError(f"dimension mismatch: partition covers {len(p.labels)} "
                         f"vertices, matrix has {mat.rows} rows")
    labels = p.labels
    balanced = is_balanced(p, epsilon)
    sups = mat.column_supports()

    cut = 0
    exclusive: list[list[int]] = [[] for _ in range(p.k)]
    for j, sup in enumerate(sups):
        parts = {labels[r] for r in sup}
        if len(parts) >= 2:
            cut += 1
        elif len(parts) == 1:
            exclusive[next(iter(parts)) - 1].append(j)

    per_part: list[tuple[int, int]] = []
    chosen: list[list[int]] = []
    for part in range(1, p.k + 1):
        rows_i = p.members(part)
        pos = {r: t for t, r in enumerate(rows_i)}
        basis: dict[int, int] = {}
        picked: list[int] = []
        for j in exclusive[part - 1]:
            v = 0
            for r in sups[j]:
                v |= 1 << pos[r]
            while v:
                hb = v.bit_length() - 1
                if hb in basis:
                    v ^= basis[hb]
                else:
                    basis[hb] = v
                    picked.append(j)
                    break
            if len(picked) == len(rows_i):
                break
        per_part.append((len(rows_i), len(picked)))
        chosen.append(picked)

    feasible = balanced and all(r == s for s, r in per_part)
    row_order = col_order = None
    if feasible:
        row_order = tuple(v for part in range(1, p.k + 1)
                          for v in p.members(part))
        diag_cols = [j for picked in chosen for j in picked]
        rest = [j for j in range(mat.cols) if j not in set(diag_cols)]
        col_order = tuple(diag_cols + rest)
    return EncodabilityVerdict(feasible, balanced, cut, tuple(per_part),
                               row_order, col_order)


def min_cutsize_bruteforce(h: Hypergraph, parts: int, epsilon,
                           cap: int = DEFAULT_ENUM_CAP) -> tuple[int, Partition]:
    """Exact minimum cutsize over eps-balanced ``parts``-way partitions.

    Enumerates all parts^m labeled assignments, so it is only usable at
    desk scale; guarded by ``cap``.  Returns the minimum and one argmin.
    """
    m = h.vertex_count
    if parts < 1:
        raise ValueError("part count must be at least 1")
    if parts > m:
        raise ValueError(f"no partition into {parts} non-empty parts exists "
                         f"for {m} vertices")
    if parts ** m > cap:
        raise CapExceeded(f"{parts}^{m} assignments exceed cap {cap}")
    eps = as_ratio(epsilon)
    if eps < 0:
        raise ValueError("imbalance ratio must be non-negative")
    # Integer ceiling on a part size; exact because eps is a Fraction.
    limit = math.floor(Fraction(m, parts) * (1 + eps))

    sups = h.supports
    best: tuple[int, tuple[int, ...]] | None = None
    for labels in itertools.product(range(1, parts + 1), repeat=m):
        sizes = Counter(labels)
        if len(sizes) != parts or max(sizes.values()) > limit:
            continue
        cut = 0
        for sup in sups:
            it = iter(sup)
            first = labels[next(it)]
            if any(labels[v] != first for v in it):
                cut += 1
        if best is None or cut < best[0]:
            best = (cut, labels)
            if cut == 0:
                break
    if best is None:
        raise ValueError(f"no {epsilon}-balanced partition into {parts} "
                         f"non-empty parts exists for {m} vertices")
    return best[0], Partition(best[1], parts)


def max_parallel_degree(mat: BinaryMatrix, epsilon,
                        cap: int = DEFAULT_ENUM_CAP) -> int:
    """Largest K with n - m >= min cutsize over eps-balanced K-way partitions.

    Returns 1 when no K >= 2 qualifies.  All K in [2, m] are scanned:
    existence of a balanced partition is not monotone in K (odd m with
    eps = 0 has no balanced bipartition but a balanced m-way partition).
    """
    h = hypergraph_from_matrix(mat)
    slack = mat.cols - mat.rows
    best = 1
    for k in range(2, mat.rows + 1):
        try:
            mincut, _ = min_cutsize_bruteforce(h, k, epsilon, cap=cap)
        except CapExceeded:
            raise
        except ValueError:
            continue  # no balanced k-way partition exists
        if slack >= mincut:
            best = k
    return best
