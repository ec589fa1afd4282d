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
# File:    src/quantum/qft.py
# Description:
#   Additive characters and the unitaries built from them: the direct and
#   factored QFT over GR(p^s, p^{sm}), the base-ring QFT, U_D, shift
#   operators, the control additive gates A_r and B_r, the finite-field QFT
#   and the CRT-assembled QFT over Z_n.
#
# ---------------------------------------------------------------------------

"""
Matrix builders. Row index = output basis state, column index = input basis
state, both in basis-index order (a_0 least significant). Two-register
states |x>|y> use index(x) * p^{sm} + index(y).

Every builder that materialises a dense matrix checks the dimension cap
first and raises DimensionCapExceeded.
"""

from functools import lru_cache
import logging
from typing import Optional

import numpy as np

from ..core.crt import crt_decompose
from ..core.discriminant import DiscriminantMatrix, build_discriminant
from ..core.ring import DEFAULT_DIMENSION_CAP, GrElement, RingContext, ensure_dimension
from .matrices import ComplexMatrix, PermutationMap, tensor

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def roots_of_unity(q: int) -> np.ndarray:
    """exp(2 pi i k / q) for k = 0..q-1, indexed by the reduced exponent"""
    roots = np.exp(2j * np.pi * np.arange(q) / q)
    roots.setflags(write=False)
    return roots


# ----------------------------------------------------------------------
# Characters and the direct QFT
# ----------------------------------------------------------------------
def character(ring: RingContext, alpha: GrElement, u: GrElement) -> complex:
    """chi_alpha(u) = omega^{Tr(alpha u)} with omega = exp(2 pi i / p^s)"""
    exponent = int(ring.trace(ring.mul(alpha, u)))
    # one scalar; the root table is only built for the capped matrices
    return complex(np.exp(2j * np.pi * exponent / ring.modulus))


def character_exponents(ring: RingContext, cap: int = DEFAULT_DIMENSION_CAP) -> np.ndarray:
    """Integer matrix E[index(alpha), index(u)] = Tr(alpha u)"""
    ensure_dimension(ring.order, cap)
    traces = ring.trace_vector
    rows = [traces[ring.products_index(alpha)] for alpha in ring.elements()]
    return np.vstack(rows)


def character_table(ring: RingContext, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """Unnormalised matrix of chi_alpha(u)"""
    return roots_of_unity(ring.modulus)[character_exponents(ring, cap)]


def qft_direct(ring: RingContext, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """F[alpha, u] = chi_alpha(u) / sqrt(p^{sm})"""
    F = character_table(ring, cap) / np.sqrt(ring.order)
    logger.debug("built direct QFT of %s (dim %d)", ring.spec.label, ring.order)
    return F


def qft_base(p: int, s: int, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """Discrete Fourier matrix over Z_{p^s}"""
    return qft_cyclic(p ** s, cap)


# ----------------------------------------------------------------------
# Factored QFT
# ----------------------------------------------------------------------
def permutation_map_UD(
    ring: RingContext,
    D: Optional[DiscriminantMatrix] = None,
    inverse: bool = False
) -> PermutationMap:
    """Index map x -> D x (or D^{-1} x) on all of R'"""
    D = D if D is not None else build_discriminant(ring)
    M = np.array(D.inverse if inverse else D.entries, dtype=np.int64)
    images = (ring.coefficient_array @ M.T) % ring.modulus
    return PermutationMap(ring.order, ring.basis.encode_array(images))


def permutation_UD(
    ring: RingContext,
    D: Optional[DiscriminantMatrix] = None,
    cap: int = DEFAULT_DIMENSION_CAP
) -> ComplexMatrix:
    ensure_dimension(ring.order, cap)
    return permutation_map_UD(ring, D).to_dense()


def qft_factored(
    ring: RingContext,
    D: Optional[DiscriminantMatrix] = None,
    cap: int = DEFAULT_DIMENSION_CAP
) -> ComplexMatrix:
    """(F_R)^{tensor m} composed with U_D"""
    ensure_dimension(ring.order, cap)
    base = qft_base(ring.p, ring.s, cap)
    F_tensor = tensor([base] * ring.m)
    # right-multiplying by a permutation reorders columns
    ud = permutation_map_UD(ring, D)
    return F_tensor[:, ud.mapping]


# ----------------------------------------------------------------------
# Shift operators and control additive gates
# ----------------------------------------------------------------------
def shift_map(ring: RingContext, alpha: GrElement) -> PermutationMap:
    """|u> -> |u + alpha>"""
    ring._check(alpha)
    shifted = (ring.coefficient_array + np.array(alpha.coeffs, dtype=np.int64)) % ring.modulus
    return PermutationMap(ring.order, ring.basis.encode_array(shifted))


def shift_operator(
    ring: RingContext,
    alpha: GrElement,
    cap: int = DEFAULT_DIMENSION_CAP
) -> ComplexMatrix:
    ensure_dimension(ring.order, cap)
    return shift_map(ring, alpha).to_dense()


def _add_scaled_register(ring: RingContext, r: GrElement) -> np.ndarray:
    """
    table[i, j] = index(u_j + r u_i): second register plus r times the first,
    for every pair of basis states.
    """
    coeffs = ring.coefficient_array
    scaled = coeffs[ring.products_index(r)]
    sums = (scaled[:, None, :] + coeffs[None, :, :]) % ring.modulus
    return ring.basis.encode_array(sums.reshape(-1, ring.m)).reshape(ring.order, ring.order)


def gate_A_map(ring: RingContext, r: GrElement, cap: int = DEFAULT_DIMENSION_CAP) -> PermutationMap:
    """A_r |x>|y> = |x>|y + r x>"""
    n = ring.order
    ensure_dimension(n * n, cap * cap)
    new_y = _add_scaled_register(ring, r)
    x_index = np.arange(n, dtype=np.int64)[:, None]
    return PermutationMap(n * n, (x_index * n + new_y).reshape(-1))


def gate_B_map(ring: RingContext, r: GrElement, cap: int = DEFAULT_DIMENSION_CAP) -> PermutationMap:
    """B_r |x>|y> = |x + r y>|y>"""
    n = ring.order
    ensure_dimension(n * n, cap * cap)
    # new_x[j, i] = index(x_i + r y_j)
    new_x = _add_scaled_register(ring, r)
    y_index = np.arange(n, dtype=np.int64)[None, :]
    return PermutationMap(n * n, (new_x.T * n + y_index).reshape(-1))


def gate_A(ring: RingContext, r: GrElement, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """Dense A_r; the cap applies to the two-register dimension p^{2sm}"""
    ensure_dimension(ring.order ** 2, cap)
    return gate_A_map(ring, r, cap).to_dense()


def gate_B(ring: RingContext, r: GrElement, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    ensure_dimension(ring.order ** 2, cap)
    return gate_B_map(ring, r, cap).to_dense()


# ----------------------------------------------------------------------
# Reference transforms
# ----------------------------------------------------------------------
def absolute_field_trace(ring: RingContext, a: GrElement) -> int:
    """sum_j a^{p^j} for s = 1, computed with powers only"""
    if ring.s != 1:
        raise ValueError("the absolute field trace needs s = 1")
    total = ring.zero
    for j in range(ring.m):
        total = ring.add(total, ring.pow(a, ring.p ** j))
    return total.coeffs[0]


def qft_finite_field(ring: RingContext, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """QFT over F_{p^m} from the characters exp(2 pi i Tr(a u) / p)"""
    if ring.s != 1:
        raise ValueError(f"{ring.spec.label} is not a field (s = {ring.s})")
    ensure_dimension(ring.order, cap)
    traces = np.array([absolute_field_trace(ring, a) for a in ring.elements()], dtype=np.int64)
    exponents = np.vstack([traces[ring.products_index(alpha)] for alpha in ring.elements()])
    return roots_of_unity(ring.p)[exponents] / np.sqrt(ring.order)


def qft_cyclic(n: int, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """F[y, x] = exp(2 pi i x y / n) / sqrt(n)"""
    ensure_dimension(n, cap)
    k = np.arange(n, dtype=np.int64)
    return roots_of_unity(n)[np.outer(k, k) % n] / np.sqrt(n)


def qft_cyclic_crt(n: int, cap: int = DEFAULT_DIMENSION_CAP) -> ComplexMatrix:
    """
    QFT over Z_n assembled from the QFTs of its prime-power components:
    inputs are relabelled x -> (x mod n_i), outputs (y_i) -> sum (n / n_i) y_i mod n.
    """
    ensure_dimension(n, cap)
    decomposition = crt_decompose(n)
    components = decomposition.components
    F = tensor([qft_cyclic(c, cap) for c in components])

    radix = np.array([int(np.prod(components[i + 1:], dtype=np.int64)) for i in range(len(components))],
                     dtype=np.int64)
    x = np.arange(n, dtype=np.int64)
    residues = np.array([decomposition.split(v) for v in range(n)], dtype=np.int64)
    input_index = residues @ radix

    digits = (x[:, None] // radix[None, :]) % np.array(components, dtype=np.int64)[None, :]
    output_value = (digits @ np.array([n // c for c in components], dtype=np.int64)) % n

    out = np.empty_like(F)
    out[output_value, :] = F[:, input_index]
    return out
