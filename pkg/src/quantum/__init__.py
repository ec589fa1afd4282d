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
# File:    src/quantum/__init__.py
# Description:
#   Initializes the quantum module: QFT matrices over Galois rings, qudit
#   state vectors and the hidden-multiplier recovery.
#
# ---------------------------------------------------------------------------

"""
Initializes the quantum subpackage, exposing the unitary builders, the
state-vector simulation and the one-query recovery of a hidden multiplier.
"""


from .matrices import (
    ComplexMatrix,
    PermutationMap,
    identity,
    tensor,
    matmul,
    dagger,
    max_abs_diff,
    unitarity_deviation
)
from .qft import (
    roots_of_unity,
    character,
    character_exponents,
    character_table,
    qft_direct,
    qft_base,
    permutation_map_UD,
    permutation_UD,
    qft_factored,
    shift_map,
    shift_operator,
    gate_A_map,
    gate_B_map,
    gate_A,
    gate_B,
    absolute_field_trace,
    qft_finite_field,
    qft_cyclic,
    qft_cyclic_crt
)
from .state import (
    StateVector,
    TensorProductOperator,
    apply_unitary
)
from .hidden_linear import (
    Oracle,
    RecoveryResult,
    make_oracle,
    run_recovery,
    recover_r,
    simulate_with_gate_b,
    draw_hidden
)

# Version information
__version__ = '0.1.0'

__all__ = [
    # Dense and permutation matrices
    'ComplexMatrix',
    'PermutationMap',
    'identity',
    'tensor',
    'matmul',
    'dagger',
    'max_abs_diff',
    'unitarity_deviation',

    # QFT and gates
    'roots_of_unity',
    'character',
    'character_exponents',
    'character_table',
    'qft_direct',
    'qft_base',
    'permutation_map_UD',
    'permutation_UD',
    'qft_factored',
    'shift_map',
    'shift_operator',
    'gate_A_map',
    'gate_B_map',
    'gate_A',
    'gate_B',
    'absolute_field_trace',
    'qft_finite_field',
    'qft_cyclic',
    'qft_cyclic_crt',

    # State vectors
    'StateVector',
    'TensorProductOperator',
    'apply_unitary',

    # Hidden multiplier recovery
    'Oracle',
    'RecoveryResult',
    'make_oracle',
    'run_recovery',
    'recover_r',
    'simulate_with_gate_b',
    'draw_hidden',
]

PermutationMap.__doc__ = "Permutation unitary kept as an index map; to_dense() builds the 0/1 matrix."
Oracle.__doc__ = "Query-counting black box applying A_r by index permutation."
