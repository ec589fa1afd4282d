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
# File:    src/core/crt.py
# Description:
#   Prime-power decomposition Z_n = Z_{p1^e1} + ... + Z_{pk^ek} and the
#   matching residue maps.
#
# ---------------------------------------------------------------------------

"""Chinese-remainder decomposition of Z_n into prime-power components."""

from dataclasses import dataclass
from typing import Dict, Tuple

from sympy import factorint


@dataclass(frozen=True)
class CrtDecomposition:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    @property
    def components(self) -> Tuple[int, ...]:
        """Prime-power moduli p^e, ordered by prime"""
        return tuple(p ** e for p, e in self.factors)

    @property
    def statement(self) -> str:
        parts = " ⊕ ".join(f"Z_{c}" for c in self.components)
        if len(self.factors) == 1:
            return parts
        return f"Z_{self.n} ≅ {parts}"

    def split(self, x: int) -> Tuple[int, ...]:
        """x mod n_i for every component"""
        return tuple(x % c for c in self.components)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'factors': [{'p': p, 'e': e, 'component': p ** e} for p, e in self.factors],
            'statement': self.statement
        }


def crt_decompose(n: int) -> CrtDecomposition:
    """Factor n >= 2 into prime powers"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    factors = tuple(sorted(factorint(n).items()))
    return CrtDecomposition(n, tuple((int(p), int(e)) for p, e in factors))
