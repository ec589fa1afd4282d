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
# File:    src/core/primitive.py
# Description:
#   Validation and brute-force search of monic basic primitive polynomials
#   defining GR(p^s, p^{sm}).
#
# ---------------------------------------------------------------------------

"""
A defining polynomial h is accepted when three sub-checks pass:

    irreducible_mod_p     h mod p has no monic factor of degree 1..m//2
    primitive_root_order  the root of h mod p has order p^m - 1 in F_p[X]/(h mod p)
    teichmuller_root      in Z_{p^s}[X]/(h), xi^{p^m-1} = 1 and xi^d != 1 for
                          every proper divisor d of p^m - 1

The third check is what makes {0, 1, xi, ..., xi^{p^m-2}} a Teichmuller set
over Z_{p^s}, not only over F_p.
"""

from dataclasses import dataclass, field
from itertools import product
import logging
from typing import Dict, List, Optional, Tuple

from sympy import divisors

from .exceptions import SearchSpaceExhausted
from .polynomial import find_factor_mod_p, poly_powmod, poly_reduce, root_order_mod_p
from .ring import DEFAULT_DIMENSION_CAP, RingSpec, ensure_dimension

logger = logging.getLogger(__name__)

IRREDUCIBLE = "irreducible_mod_p"
ROOT_ORDER = "primitive_root_order"
TEICHMULLER_ROOT = "teichmuller_root"


@dataclass
class SubCheck:
    """Outcome of one sub-check"""
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class ValidationReport:
    """All sub-check outcomes for one candidate polynomial"""
    spec: RingSpec
    checks: List[SubCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[str]:
        for check in self.checks:
            if not check.passed:
                return check.name
        return None

    def to_dict(self) -> Dict:
        return {
            'ring': self.spec.to_dict(),
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks]
        }


def _check_irreducible(spec: RingSpec) -> SubCheck:
    factor = find_factor_mod_p(spec.h, spec.p)
    if factor is None:
        return SubCheck(IRREDUCIBLE, True, f"no factor of degree <= {spec.m // 2}")
    return SubCheck(IRREDUCIBLE, False, f"factor {factor} (low-to-high) divides h mod {spec.p}")


def _check_root_order(spec: RingSpec) -> SubCheck:
    target = spec.teichmuller_order
    order = root_order_mod_p(spec.h, spec.p, limit=target)
    if order == target:
        return SubCheck(ROOT_ORDER, True, f"order {order}")
    found = "not reached within the limit" if order is None else str(order)
    return SubCheck(ROOT_ORDER, False, f"order {found}, expected {target}")


def _check_teichmuller_root(spec: RingSpec) -> SubCheck:
    q = spec.modulus
    target = spec.teichmuller_order
    one = poly_reduce([1], spec.h, q)
    xi = poly_reduce([0, 1], spec.h, q)

    if poly_powmod(xi, target, spec.h, q) != one:
        return SubCheck(TEICHMULLER_ROOT, False, f"xi^{target} != 1 mod {q}")
    for d in divisors(target)[:-1]:
        if poly_powmod(xi, d, spec.h, q) == one:
            return SubCheck(TEICHMULLER_ROOT, False, f"xi^{d} = 1 for proper divisor {d}")
    return SubCheck(TEICHMULLER_ROOT, True, f"xi has order {target} mod {q}")


def validate_basic_primitive(spec: RingSpec) -> ValidationReport:
    """
    Run every sub-check on spec.h. Never raises for a bad polynomial; the
    report carries the failures.
    """
    if not spec.is_resolved:
        raise ValueError("validate_basic_primitive needs a spec with h")
    report = ValidationReport(spec)
    report.checks.append(_check_irreducible(spec))
    report.checks.append(_check_root_order(spec))
    report.checks.append(_check_teichmuller_root(spec))
    return report


def find_basic_primitive(
    p: int,
    s: int,
    m: int,
    cap: int = DEFAULT_DIMENSION_CAP
) -> Tuple[int, ...]:
    """
    Lexicographically smallest (h_0, ..., h_{m-1}) over Z_{p^s} that passes
    validate_basic_primitive.

    Args:
        p, s, m: Ring parameters
        cap: Guard on p^{sm} for the exhaustive search

    Returns:
        The low coefficients of the monic defining polynomial
    """
    base = RingSpec(p, s, m)
    ensure_dimension(base.order, cap)

    candidates = 0
    for h in product(range(base.modulus), repeat=m):
        candidates += 1
        # cheap mod-p filters first
        spec = base.with_h(h)
        if find_factor_mod_p(h, p) is not None:
            continue
        if validate_basic_primitive(spec).passed:
            logger.debug("found h=%s for %s after %d candidates", h, base.label, candidates)
            return tuple(h)

    raise SearchSpaceExhausted(
        f"no basic primitive polynomial among {candidates} candidates for {base.label}"
    )
