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
# File:    src/verification/__init__.py
# Description:
#   Initializes the verification module: checks, their registry and the
#   aggregated report.
#
# ---------------------------------------------------------------------------

"""
Initializes the verification subpackage, exposing the individual checks,
the suite runner and the report types.
"""


from .report import (
    CheckStatus,
    CheckResult,
    VerificationReport
)
from .checks import (
    CHECKS,
    CheckContext,
    CheckOutcome,
    register_check,
    run_check,
    check_character_sum,
    check_character_sum_by_class,
    check_trace_kernel,
    check_orthonormality,
    check_shift_diagonalization,
    check_control_inversion,
    check_factorization,
    check_unitarity,
    check_reductions
)
from .suite import (
    DEFAULT_SPECS,
    run_ring,
    run_all
)

# Version information
__version__ = '0.1.0'

__all__ = [
    # Report
    'CheckStatus',
    'CheckResult',
    'VerificationReport',

    # Checks
    'CHECKS',
    'CheckContext',
    'CheckOutcome',
    'register_check',
    'run_check',
    'check_character_sum',
    'check_character_sum_by_class',
    'check_trace_kernel',
    'check_orthonormality',
    'check_shift_diagonalization',
    'check_control_inversion',
    'check_factorization',
    'check_unitarity',
    'check_reductions',

    # Suite
    'DEFAULT_SPECS',
    'run_ring',
    'run_all',
]

VerificationReport.__doc__ = "Per-check outcomes of a run; passes when no entry failed."
