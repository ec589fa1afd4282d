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
# File:    src/quantum/matrices.py
# Description:
#   Dense complex matrix helpers and the index-map form of permutation
#   matrices.
#
# ---------------------------------------------------------------------------

"""
Dense matrices are plain complex128 numpy arrays. Tensor products follow the
basis-index convention: the first factor is the most significant digit,
which is exactly numpy.kron order.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Dict, Sequence

import numpy as np

from ..core.exceptions import ShapeMismatch

ComplexMatrix = np.ndarray


@dataclass(frozen=True, eq=False)
class PermutationMap:
    """
    Permutation matrix stored as an index map: basis state |i> goes to
    |mapping[i]>, so the dense matrix has a 1 at (mapping[i], i).
    """
    dim: int
    mapping: np.ndarray

    def __post_init__(self):
        mapping = np.asarray(self.mapping, dtype=np.int64)
        if mapping.shape != (self.dim,):
            raise ShapeMismatch(f"mapping has shape {mapping.shape}, expected ({self.dim},)")
        if not np.array_equal(np.sort(mapping), np.arange(self.dim)):
            raise ValueError("mapping is not a permutation")
        mapping.setflags(write=False)
        object.__setattr__(self, 'mapping', mapping)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        vector = np.asarray(vector)
        if vector.shape[0] != self.dim:
            raise ShapeMismatch(f"vector of length {vector.shape[0]} for dimension {self.dim}")
        out = np.empty_like(vector)
        out[self.mapping] = vector
        return out

    def compose(self, other: 'PermutationMap') -> 'PermutationMap':
        """self after other"""
        if other.dim != self.dim:
            raise ShapeMismatch(f"cannot compose dimensions {self.dim} and {other.dim}")
        return PermutationMap(self.dim, self.mapping[other.mapping])

    def inverse(self) -> 'PermutationMap':
        inv = np.empty(self.dim, dtype=np.int64)
        inv[self.mapping] = np.arange(self.dim, dtype=np.int64)
        return PermutationMap(self.dim, inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.mapping, np.arange(self.dim)))

    def equals(self, other: 'PermutationMap') -> bool:
        return self.dim == other.dim and bool(np.array_equal(self.mapping, other.mapping))

    def to_dense(self) -> ComplexMatrix:
        M = np.zeros((self.dim, self.dim), dtype=np.complex128)
        M[self.mapping, np.arange(self.dim)] = 1.0
        return M

    def to_dict(self) -> Dict:
        return {'dim': self.dim, 'map': self.mapping.tolist()}


def _square(M: np.ndarray, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeMismatch(f"{name} must be square, got shape {M.shape}")
    return M


def identity(dim: int) -> ComplexMatrix:
    return np.eye(dim, dtype=np.complex128)


def tensor(Ms: Sequence[np.ndarray]) -> ComplexMatrix:
    """Kronecker product, first factor most significant"""
    if not Ms:
        raise ShapeMismatch("tensor of an empty sequence")
    return reduce(np.kron, [_square(M) for M in Ms])


def matmul(A: np.ndarray, B: np.ndarray) -> ComplexMatrix:
    A, B = _square(A, "A"), _square(B, "B")
    if A.shape != B.shape:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def dagger(M: np.ndarray) -> ComplexMatrix:
    return _square(M).conj().T


def max_abs_diff(M: np.ndarray, N: np.ndarray) -> float:
    M, N = np.asarray(M), np.asarray(N)
    if M.shape != N.shape:
        raise ShapeMismatch(f"cannot compare {M.shape} with {N.shape}")
    if M.size == 0:
        return 0.0
    return float(np.max(np.abs(M - N)))


def unitarity_deviation(M: np.ndarray) -> float:
    """max of ||M M^dagger - I||_max and ||M^dagger M - I||_max"""
    M = _square(M)
    eye = identity(M.shape[0])
    Md = dagger(M)
    return max(max_abs_diff(M @ Md, eye), max_abs_diff(Md @ M, eye))
