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
# File:    src/core/__init__.py
# Description:
#   Initializes the core module: exact Galois ring arithmetic, defining
#   polynomial validation, the discriminant matrix and the CRT utility.
#
# ---------------------------------------------------------------------------

"""
Initializes the core subpackage, exposing the ring types and operations that
every matrix builder and verification check is written against.
"""


from .exceptions import (
    GaloisRingError,
    NotPrime,
    NotBasicPrimitive,
    DimensionCapExceeded,
    RingMismatch,
    TraceNotInBaseRing,
    TraceTableMismatch,
    NotAUnit,
    NotAZeroDivisor,
    SearchSpaceExhausted,
    NotInvertible,
    ShapeMismatch,
    AmbiguousMeasurement
)
from .ring import (
    DEFAULT_DIMENSION_CAP,
    RingSpec,
    ZmodElem,
    GrElement,
    PadicForm,
    ElementClass,
    BasisIndex,
    RingContext,
    ensure_dimension,
    make_ring,
    gr_add,
    gr_neg,
    gr_sub,
    gr_mul,
    gr_pow,
    frobenius,
    trace,
    classify,
    gr_inverse,
    zero_divisor_factor,
    padic_decompose,
    padic_compose,
    teichmuller_set
)
from .primitive import (
    SubCheck,
    ValidationReport,
    validate_basic_primitive,
    find_basic_primitive
)
from .discriminant import (
    TraceTable,
    DiscriminantMatrix,
    OperationCounter,
    xi_power,
    xi_power_recursive,
    companion_matrix,
    trace_table,
    trace_table_recursive,
    build_discriminant,
    invert_mod,
    matvec_mod,
    apply_D,
    apply_D_inverse,
    kernel_is_trivial
)
from .crt import CrtDecomposition, crt_decompose

# Version information
__version__ = '0.1.0'

# Define what should be available when using "from core import *"
__all__ = [
    # Errors
    'GaloisRingError',
    'NotPrime',
    'NotBasicPrimitive',
    'DimensionCapExceeded',
    'RingMismatch',
    'TraceNotInBaseRing',
    'TraceTableMismatch',
    'NotAUnit',
    'NotAZeroDivisor',
    'SearchSpaceExhausted',
    'NotInvertible',
    'ShapeMismatch',
    'AmbiguousMeasurement',

    # Ring arithmetic
    'DEFAULT_DIMENSION_CAP',
    'RingSpec',
    'ZmodElem',
    'GrElement',
    'PadicForm',
    'ElementClass',
    'BasisIndex',
    'RingContext',
    'ensure_dimension',
    'make_ring',
    'gr_add',
    'gr_neg',
    'gr_sub',
    'gr_mul',
    'gr_pow',
    'frobenius',
    'trace',
    'classify',
    'gr_inverse',
    'zero_divisor_factor',
    'padic_decompose',
    'padic_compose',
    'teichmuller_set',

    # Defining polynomials
    'SubCheck',
    'ValidationReport',
    'validate_basic_primitive',
    'find_basic_primitive',

    # Discriminant
    'TraceTable',
    'DiscriminantMatrix',
    'OperationCounter',
    'xi_power',
    'xi_power_recursive',
    'companion_matrix',
    'trace_table',
    'trace_table_recursive',
    'build_discriminant',
    'invert_mod',
    'matvec_mod',
    'apply_D',
    'apply_D_inverse',
    'kernel_is_trivial',

    # CRT
    'CrtDecomposition',
    'crt_decompose',
]

# Module level doc strings for key components
RingContext.__doc__ = "Validated Galois ring with lazily computed tables of powers, traces and Teichmuller digits."
DiscriminantMatrix.__doc__ = "Hankel matrix of traces Tr(xi^{i+j}) together with its inverse over Z_{p^s}."
