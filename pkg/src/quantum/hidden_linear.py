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
# File:    src/quantum/hidden_linear.py
# Description:
#   One-query recovery of the hidden multiplier r of a control additive
#   gate A_r, by conjugating the oracle with QFTs.
#
# ---------------------------------------------------------------------------

"""
Since (F^dagger (x) F) A_r (F (x) F^dagger) = B_r and B_r |0>|1> = |r>|1>,
preparing |0>|1>, applying F (x) F^dagger, querying A_r once and applying
F^dagger (x) F leaves r in the first register. The readout takes the
dominant amplitude; no sampling is simulated.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.exceptions import AmbiguousMeasurement
from ..core.ring import DEFAULT_DIMENSION_CAP, GrElement, RingContext
from .matrices import ComplexMatrix, PermutationMap, dagger
from .qft import gate_A_map, gate_B_map, qft_direct
from .state import StateVector, TensorProductOperator, apply_unitary

MEASUREMENT_THRESHOLD = 1e-9


class Oracle:
    """
    Black-box A_r. Only the index map is kept, so r cannot be read back
    through the handle; every application counts as one query.
    """

    def __init__(self, permutation: PermutationMap, logger=None):
        self._permutation = permutation
        self._queries = 0
        self._logger = logger

    @property
    def queries(self) -> int:
        return self._queries

    @property
    def dim(self) -> int:
        return self._permutation.dim

    def query(self, state: StateVector) -> StateVector:
        result = apply_unitary(state, self._permutation)
        self._queries += 1
        if self._logger is not None:
            self._logger.log_query(self._queries, self.dim)
        return result

    __call__ = query

    def __repr__(self) -> str:
        return f"Oracle(dim={self.dim}, queries={self._queries})"


def make_oracle(
    ring: RingContext,
    r: GrElement,
    cap: int = DEFAULT_DIMENSION_CAP,
    logger=None
) -> Oracle:
    return Oracle(gate_A_map(ring, r, cap), logger=logger)


@dataclass
class RecoveryResult:
    recovered: GrElement
    amplitude: float
    queries: int
    final_state: StateVector


def _initial_state(ring: RingContext) -> StateVector:
    n = ring.order
    return StateVector.basis((n, n), (ring.index_of(ring.zero), ring.index_of(ring.one)))


def run_recovery(
    ring: RingContext,
    oracle: Oracle,
    F: Optional[ComplexMatrix] = None,
    threshold: float = MEASUREMENT_THRESHOLD,
    cap: int = DEFAULT_DIMENSION_CAP
) -> RecoveryResult:
    """
    Full recovery pipeline with the final state kept for inspection.

    Raises:
        ValueError: the oracle was queried before
        AmbiguousMeasurement: no amplitude reaches 1 - threshold
    """
    if oracle.queries != 0:
        raise ValueError(f"oracle has already been queried {oracle.queries} time(s)")
    F = F if F is not None else qft_direct(ring, cap)
    Fd = dagger(F)

    state = apply_unitary(_initial_state(ring), TensorProductOperator((F, Fd)))
    state = oracle.query(state)
    state = apply_unitary(state, TensorProductOperator((Fd, F)))

    (x_index, _), amplitude = state.dominant()
    if amplitude < 1.0 - threshold:
        raise AmbiguousMeasurement(amplitude, 1.0 - threshold)
    return RecoveryResult(ring.element_at(x_index), amplitude, oracle.queries, state)


def recover_r(
    ring: RingContext,
    oracle: Oracle,
    F: Optional[ComplexMatrix] = None,
    cap: int = DEFAULT_DIMENSION_CAP
) -> GrElement:
    """Recover the hidden r with a single oracle query"""
    return run_recovery(ring, oracle, F=F, cap=cap).recovered


def simulate_with_gate_b(
    ring: RingContext,
    r: GrElement,
    cap: int = DEFAULT_DIMENSION_CAP
) -> StateVector:
    """B_r applied directly to |0>|1>"""
    return apply_unitary(_initial_state(ring), gate_B_map(ring, r, cap))


def draw_hidden(ring: RingContext, seed: Optional[int] = None) -> GrElement:
    """Uniform element of R', zero divisors included"""
    rng = np.random.default_rng(seed)
    return ring.element_at(int(rng.integers(ring.order)))
