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
# File:    src/core/polynomial.py
# Description:
#   Coefficient-tuple polynomial helpers over Z_{p^s} and F_p used by the
#   ring arithmetic and by the basic-primitive validation.
#
# ---------------------------------------------------------------------------

"""
Polynomials are plain sequences of integer coefficients, lowest degree first.
A monic defining polynomial h(X) = h_0 + ... + h_{m-1} X^{m-1} + X^m is passed
around as its low coefficients (h_0, ..., h_{m-1}); the leading 1 is implied.
Reduction uses X^m = -(h_0 + h_1 X + ... + h_{m-1} X^{m-1}).
"""

from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple


Coefficients = Tuple[int, ...]


def poly_mul(a: Sequence[int], b: Sequence[int], modulus: int) -> List[int]:
    """Full (unreduced) product of two coefficient sequences mod `modulus`"""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return [c % modulus for c in out]


def poly_reduce(f: Sequence[int], h: Sequence[int], modulus: int) -> Coefficients:
    """Reduce f modulo the monic polynomial with low coefficients h"""
    m = len(h)
    work = [c % modulus for c in f]
    if len(work) < m:
        work.extend([0] * (m - len(work)))
    for k in range(len(work) - 1, m - 1, -1):
        c = work[k]
        if c:
            for j in range(m):
                work[k - m + j] = (work[k - m + j] - c * h[j]) % modulus
            work[k] = 0
    return tuple(work[:m])


def poly_mulmod(
    a: Sequence[int],
    b: Sequence[int],
    h: Sequence[int],
    modulus: int
) -> Coefficients:
    """Product in Z_modulus[X]/(h)"""
    return poly_reduce(poly_mul(a, b, modulus), h, modulus)


def poly_powmod(
    a: Sequence[int],
    k: int,
    h: Sequence[int],
    modulus: int
) -> Coefficients:
    """a^k in Z_modulus[X]/(h) by square-and-multiply"""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = poly_reduce([1], h, modulus)
    base = poly_reduce(a, h, modulus)
    while k:
        if k & 1:
            result = poly_mulmod(result, base, h, modulus)
        k >>= 1
        if k:
            base = poly_mulmod(base, base, h, modulus)
    return result


def poly_rem(f: Sequence[int], g: Sequence[int], p: int) -> List[int]:
    """Remainder of f divided by the monic polynomial g over F_p (g given in full)"""
    deg_g = len(g) - 1
    work = [c % p for c in f]
    for k in range(len(work) - 1, deg_g - 1, -1):
        c = work[k]
        if c:
            shift = k - deg_g
            for j, gj in enumerate(g):
                work[shift + j] = (work[shift + j] - c * gj) % p
    return work[:deg_g]


def monic_polynomials(p: int, degree: int) -> Iterator[List[int]]:
    """All monic polynomials of the given degree over F_p, full coefficient lists"""
    for low in product(range(p), repeat=degree):
        yield list(low) + [1]


def find_factor_mod_p(h: Sequence[int], p: int) -> Optional[List[int]]:
    """
    Brute-force search for a monic factor of degree 1..m//2 of h mod p.
    Returns the first factor found, or None when h mod p is irreducible.
    """
    m = len(h)
    full = [c % p for c in h] + [1]
    for degree in range(1, m // 2 + 1):
        for g in monic_polynomials(p, degree):
            if not any(poly_rem(full, g, p)):
                return g
    return None


def root_order_mod_p(h: Sequence[int], p: int, limit: int) -> Optional[int]:
    """
    Multiplicative order of X in F_p[X]/(h mod p), searched up to `limit`.
    None means X did not return to 1 within the limit.
    """
    h_bar = [c % p for c in h]
    one = poly_reduce([1], h_bar, p)
    x = poly_reduce([0, 1], h_bar, p)
    current = x
    for order in range(1, limit + 1):
        if current == one:
            return order
        current = poly_mulmod(current, x, h_bar, p)
    return None
