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
# File:    src/core/exceptions.py
# Description:
#   Error hierarchy shared by the ring arithmetic, the discriminant
#   computations, the matrix builders and the state-vector simulation.
#
# ---------------------------------------------------------------------------

"""
Every error raised on purpose by the library derives from GaloisRingError.
Each class also inherits the closest builtin so callers that only catch
ValueError or ArithmeticError keep working.
"""

from typing import Optional


class GaloisRingError(Exception):
    """Base class for all library errors"""


class NotPrime(GaloisRingError, ValueError):
    """The characteristic base p is not a prime number"""

    def __init__(self, p: int):
        super().__init__(f"p={p} is not prime")
        self.p = p


class NotBasicPrimitive(GaloisRingError, ValueError):
    """The defining polynomial failed one of the basic-primitive sub-checks"""

    def __init__(self, failed_check: str, report: Optional[object] = None):
        super().__init__(f"defining polynomial is not basic primitive: {failed_check} failed")
        self.failed_check = failed_check
        self.report = report


class DimensionCapExceeded(GaloisRingError):
    """A dense matrix or exhaustive enumeration would exceed the configured cap"""

    def __init__(self, dim: int, cap: int):
        super().__init__(f"dimension {dim} exceeds cap {cap}")
        self.dim = dim
        self.cap = cap


class RingMismatch(GaloisRingError, ValueError):
    """Operands belong to different rings"""


class TraceNotInBaseRing(GaloisRingError, ArithmeticError):
    """A Frobenius sum left nonzero coefficients on xi^1..xi^{m-1}"""


class TraceTableMismatch(GaloisRingError, ArithmeticError):
    """The Frobenius route and the recursive route disagree on a trace value"""


class NotAUnit(GaloisRingError, ArithmeticError):
    """Inverse requested for zero or a zero divisor"""


class NotAZeroDivisor(GaloisRingError, ValueError):
    """Zero-divisor factorization requested for zero or a unit"""


class SearchSpaceExhausted(GaloisRingError, RuntimeError):
    """No basic primitive polynomial was found; always an implementation bug"""


class NotInvertible(GaloisRingError, ArithmeticError):
    """Gauss-Jordan elimination found a column without a unit pivot"""


class ShapeMismatch(GaloisRingError, ValueError):
    """Matrix or state dimensions do not line up"""


class AmbiguousMeasurement(GaloisRingError, RuntimeError):
    """No basis amplitude dominates the final state"""

    def __init__(self, max_amplitude: float, threshold: float):
        super().__init__(
            f"largest amplitude {max_amplitude:.3e} is below the readout threshold {threshold:.3e}"
        )
        self.max_amplitude = max_amplitude
        self.threshold = threshold
