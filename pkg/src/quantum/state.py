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
# File:    src/quantum/state.py
# Description:
#   Pure-state vectors over one or more qudit registers and the operator
#   forms that act on them.
#
# ---------------------------------------------------------------------------

"""
StateVector is immutable; apply_unitary always returns a new state.
Operators come in three forms: a dense matrix, a PermutationMap, or a
TensorProductOperator that acts register by register without building the
full Kronecker product.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import ShapeMismatch
from .matrices import ComplexMatrix, PermutationMap, tensor

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalised amplitudes over registers of the given dimensions"""
    amplitudes: np.ndarray
    register_dims: Tuple[int, ...]

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        dims = tuple(int(d) for d in self.register_dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"invalid register dimensions {dims}")
        if amplitudes.shape[0] != int(np.prod(dims)):
            raise ShapeMismatch(f"{amplitudes.shape[0]} amplitudes for registers {dims}")
        norm = float(np.linalg.norm(amplitudes))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"state norm {norm!r} deviates from 1 by more than {NORM_TOLERANCE}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amplitudes)
        object.__setattr__(self, 'register_dims', dims)

    @classmethod
    def basis(cls, register_dims: Sequence[int], indices: Sequence[int]) -> 'StateVector':
        """|i_0>|i_1>... with the first register most significant"""
        dims = tuple(register_dims)
        if len(indices) != len(dims):
            raise ShapeMismatch(f"{len(indices)} indices for {len(dims)} registers")
        amplitudes = np.zeros(int(np.prod(dims)), dtype=np.complex128)
        amplitudes[np.ravel_multi_index(tuple(indices), dims)] = 1.0
        return cls(amplitudes, dims)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def register_view(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per register"""
        return self.amplitudes.reshape(self.register_dims)

    def dominant(self) -> Tuple[Tuple[int, ...], float]:
        """Register indices and magnitude of the largest amplitude"""
        flat = int(np.argmax(np.abs(self.amplitudes)))
        indices = tuple(int(i) for i in np.unravel_index(flat, self.register_dims))
        return indices, float(abs(self.amplitudes[flat]))


@dataclass(frozen=True, eq=False)
class TensorProductOperator:
    """factors[0] (x) factors[1] (x) ..., applied one register at a time"""
    factors: Tuple[np.ndarray, ...]

    def __post_init__(self):
        factors = tuple(np.asarray(f, dtype=np.complex128) for f in self.factors)
        if not factors:
            raise ShapeMismatch("a tensor product needs at least one factor")
        for f in factors:
            if f.ndim != 2 or f.shape[0] != f.shape[1]:
                raise ShapeMismatch(f"factor of shape {f.shape} is not square")
        object.__setattr__(self, 'factors', factors)

    @property
    def register_dims(self) -> Tuple[int, ...]:
        return tuple(f.shape[0] for f in self.factors)

    @property
    def dim(self) -> int:
        return int(np.prod(self.register_dims))

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        psi = np.asarray(amplitudes).reshape(self.register_dims)
        for axis, factor in enumerate(self.factors):
            psi = np.moveaxis(np.tensordot(factor, psi, axes=([1], [axis])), 0, axis)
        return psi.reshape(-1)

    def to_dense(self) -> ComplexMatrix:
        return tensor(list(self.factors))


Operator = Union[np.ndarray, PermutationMap, TensorProductOperator]


def apply_unitary(state: StateVector, operator: Operator) -> StateVector:
    """
    Apply a unitary given as a dense matrix, index map or tensor product.

    Raises:
        ShapeMismatch: operator and state dimensions differ
    """
    if isinstance(operator, PermutationMap):
        if operator.dim != state.dim:
            raise ShapeMismatch(f"permutation of dimension {operator.dim} on state of {state.dim}")
        amplitudes = operator.apply(state.amplitudes)
    elif isinstance(operator, TensorProductOperator):
        if operator.register_dims != state.register_dims:
            raise ShapeMismatch(
                f"operator registers {operator.register_dims} vs state registers {state.register_dims}"
            )
        amplitudes = operator.apply(state.amplitudes)
    else:
        matrix = np.asarray(operator)
        if matrix.shape != (state.dim, state.dim):
            raise ShapeMismatch(f"matrix of shape {matrix.shape} on state of dimension {state.dim}")
        amplitudes = matrix @ state.amplitudes
    return StateVector(amplitudes, state.register_dims)
