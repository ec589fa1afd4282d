# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 Dimitrios Kafetzis
#
# This file is part of the Galois Ring QFT project.
# Licensed under the MIT License; you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   https://opensource.org/licenses/MIT
#
# Author:  Dimitrios Kafetzis (dimitrioskafetzis@gmail.com)
# File:    src/core/discriminant.py
# Description:
#   Powers of xi, the trace table Tr(xi^0..xi^{2m-2}), the discriminant
#   matrix D_ij = Tr(xi^{i+j}) and its inverse over Z_{p^s}.
#
# ---------------------------------------------------------------------------

"""
The discriminant matrix turns the trace form into linear algebra:
Tr(x * y) = x^T D y for coefficient vectors x, y. D is invertible over
Z_{p^s} whenever {xi^i} is a basis, so x -> D x is a permutation of R'.

All matrix arithmetic here uses Python integers; entries are residues
mod p^s and products never overflow.
"""

from dataclasses import dataclass
import logging
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import NotInvertible, ShapeMismatch, TraceTableMismatch
from .ring import DEFAULT_DIMENSION_CAP, GrElement, RingContext, ensure_dimension

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


# ----------------------------------------------------------------------
# Powers of xi
# ----------------------------------------------------------------------
def _times_xi(coeffs: Sequence[int], h: Sequence[int], modulus: int) -> Tuple[int, ...]:
    """Shift up one degree and fold the X^m term back with -h"""
    m = len(h)
    top = coeffs[-1]
    shifted = [0] + list(coeffs[:-1])
    return tuple((shifted[j] - top * h[j]) % modulus for j in range(m))


def xi_power(ring: RingContext, k: int) -> GrElement:
    """xi^k by iterated multiplication with xi"""
    if k < 0:
        raise ValueError("k must be non-negative")
    coeffs = ring.one.coeffs
    for _ in range(k):
        coeffs = _times_xi(coeffs, ring.h, ring.modulus)
    return GrElement(coeffs, ring.spec)


def companion_matrix(ring: RingContext) -> IntMatrix:
    """
    Matrix C of multiplication by xi in the basis {xi^i}: column j holds the
    coefficients of xi^{j+1}, so the last column is -h.
    """
    m, q = ring.m, ring.modulus
    rows = [[0] * m for _ in range(m)]
    for j in range(m - 1):
        rows[j + 1][j] = 1
    for i in range(m):
        rows[i][m - 1] = (-ring.h[i]) % q
    return tuple(tuple(row) for row in rows)


def xi_power_recursive(ring: RingContext, k: int) -> GrElement:
    """xi^k as C^k e_0 using the companion matrix"""
    if k < 0:
        raise ValueError("k must be non-negative")
    C = companion_matrix(ring)
    vector = ring.one.coeffs
    for _ in range(k):
        vector = matvec_mod(C, vector, ring.modulus)
    return GrElement(vector, ring.spec)


# ----------------------------------------------------------------------
# Trace table
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class TraceTable:
    """Tr(xi^0) .. Tr(xi^{2m-2}) as residues mod p^s"""
    values: Tuple[int, ...]
    modulus: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(int(v) for v in self.values))
        if len(self.values) != 2 * self.m - 1:
            raise ValueError(f"expected {2 * self.m - 1} trace values, got {len(self.values)}")
        if self.values[0] != self.m % self.modulus:
            raise ValueError(f"Tr(1) must be m mod p^s = {self.m % self.modulus}")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self):
        return {'modulus': self.modulus, 'values': list(self.values)}


def trace_table_recursive(ring: RingContext) -> Tuple[int, ...]:
    """
    Trace table by the root-sum route: Tr(xi^i) = sum_j xi^{i p^j} for i < m,
    then Tr(xi^i) for m <= i <= 2m-2 by expanding xi^i in the basis and using
    linearity of the trace.
    """
    m, p, q = ring.m, ring.p, ring.modulus
    low: List[int] = []
    for i in range(m):
        total = ring.zero
        for j in range(m):
            total = ring.add(total, ring.xi_power(i * p ** j))
        if any(total.coeffs[1:]):
            raise TraceTableMismatch(f"root sum for xi^{i} left {total}")
        low.append(total.coeffs[0])

    values = list(low)
    for i in range(m, 2 * m - 1):
        expansion = xi_power_recursive(ring, i).coeffs
        values.append(sum(c * t for c, t in zip(expansion, low)) % q)
    return tuple(values)


def trace_table(ring: RingContext, cross_check: bool = True) -> TraceTable:
    """
    Tr(xi^i) for i = 0..2m-2 through the Frobenius-sum trace. With
    cross_check the recursive route must agree entry for entry.
    """
    values = tuple(int(ring.trace(xi_power(ring, i))) for i in range(2 * ring.m - 1))
    if cross_check:
        recursive = trace_table_recursive(ring)
        if recursive != values:
            raise TraceTableMismatch(
                f"Frobenius route {list(values)} vs recursive route {list(recursive)}"
            )
    return TraceTable(values, ring.modulus, ring.m)


# ----------------------------------------------------------------------
# Linear algebra over Z_{p^s}
# ----------------------------------------------------------------------
@dataclass
class OperationCounter:
    """Counts scalar multiplications and additions done by matvec_mod"""
    multiplications: int = 0
    additions: int = 0

    def reset(self) -> None:
        self.multiplications = 0
        self.additions = 0


def _as_square(M: Sequence[Sequence[int]]) -> List[List[int]]:
    rows = [[int(v) for v in row] for row in M]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ShapeMismatch(f"expected a non-empty square matrix, got {len(rows)} rows")
    return rows


def matvec_mod(
    M: Sequence[Sequence[int]],
    x: Sequence[int],
    modulus: int,
    counter: Optional[OperationCounter] = None
) -> Tuple[int, ...]:
    """M x mod modulus with an explicit double loop (m^2 multiplications)"""
    if any(len(row) != len(x) for row in M):
        raise ShapeMismatch(f"matrix rows do not match vector length {len(x)}")
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, x):
            acc += a * b
            if counter is not None:
                counter.multiplications += 1
                counter.additions += 1
        out.append(acc % modulus)
    return tuple(out)


def matmul_mod(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], modulus: int) -> IntMatrix:
    n = len(B[0])
    return tuple(
        tuple(sum(row[k] * B[k][j] for k in range(len(B))) % modulus for j in range(n))
        for row in A
    )


def identity_mod(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def invert_mod(M: Sequence[Sequence[int]], modulus: int) -> IntMatrix:
    """
    Inverse of a square matrix over Z_modulus by Gauss-Jordan elimination.
    Pivots must be units (gcd with the modulus equal to 1); rows may be swapped.

    Raises:
        NotInvertible: a column has no unit pivot at or below the diagonal
        ShapeMismatch: M is not square
    """
    rows = _as_square(M)
    n = len(rows)
    aug = [[v % modulus for v in row] + list(identity_mod(n)[i]) for i, row in enumerate(rows)]

    for col in range(n):
        pivot = next((r for r in range(col, n) if gcd(aug[r][col], modulus) == 1), None)
        if pivot is None:
            raise NotInvertible(f"no unit pivot in column {col} mod {modulus}")
        aug[col], aug[pivot] = aug[pivot], aug[col]

        scale = pow(aug[col][col], -1, modulus)
        aug[col] = [(v * scale) % modulus for v in aug[col]]
        for r in range(n):
            factor = aug[r][col]
            if r != col and factor:
                aug[r] = [(a - factor * b) % modulus for a, b in zip(aug[r], aug[col])]

    return tuple(tuple(row[n:]) for row in aug)


# ----------------------------------------------------------------------
# Discriminant matrix
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class DiscriminantMatrix:
    """D_ij = Tr(xi^{i+j}) with its inverse, both mod p^s"""
    entries: IntMatrix
    inverse: IntMatrix
    modulus: int

    def __post_init__(self):
        entries = tuple(tuple(int(v) for v in row) for row in _as_square(self.entries))
        inverse = tuple(tuple(int(v) for v in row) for row in _as_square(self.inverse))
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'inverse', inverse)
        m = len(entries)
        if len(inverse) != m:
            raise ShapeMismatch("entries and inverse differ in size")
        if any(entries[i][j] != entries[j][i] for i in range(m) for j in range(m)):
            raise ValueError("discriminant matrix must be symmetric")
        if any(entries[i][j] != entries[i + 1][j - 1] for i in range(m - 1) for j in range(1, m)):
            raise ValueError("discriminant matrix must be Hankel")
        eye = identity_mod(m)
        if (matmul_mod(entries, inverse, self.modulus) != eye
                or matmul_mod(inverse, entries, self.modulus) != eye):
            raise ValueError("inverse does not invert the discriminant matrix")

    @property
    def m(self) -> int:
        return len(self.entries)

    def to_dict(self):
        return {
            'modulus': self.modulus,
            'entries': [list(row) for row in self.entries],
            'inverse': [list(row) for row in self.inverse]
        }


def build_discriminant(ring: RingContext, table: Optional[TraceTable] = None) -> DiscriminantMatrix:
    """Discriminant matrix of the basis {xi^i} and its inverse"""
    table = table if table is not None else trace_table(ring)
    m = ring.m
    entries = tuple(tuple(table[i + j] for j in range(m)) for i in range(m))
    # NotInvertible here means the basis or the trace is wrong; let it surface
    inverse = invert_mod(entries, ring.modulus)
    logger.debug("discriminant of %s: %s", ring.spec.label, entries)
    return DiscriminantMatrix(entries, inverse, ring.modulus)


def apply_D(
    ring: RingContext,
    x: GrElement,
    D: Optional[DiscriminantMatrix] = None,
    counter: Optional[OperationCounter] = None
) -> GrElement:
    """x' with coefficient vector D x, i.e. x'_i = Tr(x xi^i)"""
    ring._check(x)
    D = D if D is not None else build_discriminant(ring)
    return GrElement(matvec_mod(D.entries, x.coeffs, ring.modulus, counter), ring.spec)


def apply_D_inverse(
    ring: RingContext,
    x: GrElement,
    D: Optional[DiscriminantMatrix] = None,
    counter: Optional[OperationCounter] = None
) -> GrElement:
    ring._check(x)
    D = D if D is not None else build_discriminant(ring)
    return GrElement(matvec_mod(D.inverse, x.coeffs, ring.modulus, counter), ring.spec)


def kernel_is_trivial(
    D: DiscriminantMatrix,
    cap: int = DEFAULT_DIMENSION_CAP
) -> bool:
    """True when b^T D != 0 for every nonzero b (exhaustive over Z_{p^s}^m)"""
    q, m = D.modulus, D.m
    ensure_dimension(q ** m, cap)
    weights = q ** np.arange(m, dtype=np.int64)
    vectors = (np.arange(q ** m, dtype=np.int64)[:, None] // weights[None, :]) % q
    images = (vectors @ np.array(D.entries, dtype=np.int64)) % q
    zero_rows = np.flatnonzero(~images.any(axis=1))
    return zero_rows.tolist() == [0]
