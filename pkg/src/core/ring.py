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
# File:    src/core/ring.py
# Description:
#   Exact arithmetic in Z_{p^s} and in the Galois ring GR(p^s, p^{sm}):
#   element types, the additive and p-adic representations, Frobenius,
#   trace, element classification and the mixed-radix basis index.
#
# ---------------------------------------------------------------------------

"""
Implements the Galois ring R' = Z_{p^s}[X]/(h(X)) for a monic basic primitive
polynomial h of degree m. Elements are stored in the additive basis
{1, xi, ..., xi^{m-1}} as coefficient tuples with entries in [0, p^s).

RingContext is immutable after construction; every table it exposes is
computed lazily on first use and cached. Module-level wrappers (gr_add,
trace, classify, ...) resolve the context of their operands through the
cached make_ring().
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property, lru_cache
import logging
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np
from sympy import isprime

from .exceptions import (
    DimensionCapExceeded,
    NotAUnit,
    NotAZeroDivisor,
    NotBasicPrimitive,
    NotPrime,
    RingMismatch,
    TraceNotInBaseRing,
)
from .polynomial import poly_mulmod, poly_reduce

logger = logging.getLogger(__name__)

DEFAULT_DIMENSION_CAP = 4096


def ensure_dimension(dim: int, cap: int) -> None:
    """Raise DimensionCapExceeded when dim is above cap"""
    if dim > cap:
        raise DimensionCapExceeded(dim, cap)


@dataclass(frozen=True)
class RingSpec:
    """Parameters (p, s, m, h) of GR(p^s, p^{sm}); h holds h_0..h_{m-1}"""
    p: int
    s: int
    m: int
    h: Tuple[int, ...] = ()

    def __post_init__(self):
        for name in ('p', 's', 'm'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ValueError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.s < 1 or self.m < 1:
            raise ValueError("s and m must be >= 1")
        if self.p < 2 or not isprime(self.p):
            raise NotPrime(self.p)

        h = tuple(int(c) % self.modulus for c in self.h)
        # Empty h means "search for one" (resolved by make_ring)
        if h and len(h) != self.m:
            raise ValueError(f"h must have exactly m={self.m} coefficients, got {len(h)}")
        object.__setattr__(self, 'h', h)

    @property
    def modulus(self) -> int:
        """Characteristic p^s"""
        return self.p ** self.s

    @property
    def order(self) -> int:
        """Cardinality p^{sm}"""
        return self.p ** (self.s * self.m)

    @property
    def residue_order(self) -> int:
        """Size p^m of the residue field and of the Teichmuller set"""
        return self.p ** self.m

    @property
    def teichmuller_order(self) -> int:
        """Multiplicative order p^m - 1 of xi"""
        return self.p ** self.m - 1

    @property
    def is_resolved(self) -> bool:
        return len(self.h) == self.m

    @property
    def label(self) -> str:
        return f"GR({self.modulus},{self.order})"

    def with_h(self, h: Sequence[int]) -> 'RingSpec':
        return replace(self, h=tuple(h))

    def to_dict(self) -> Dict:
        return {'p': self.p, 's': self.s, 'm': self.m, 'h': list(self.h)}

    @classmethod
    def from_dict(cls, spec_dict: Dict) -> 'RingSpec':
        missing = [k for k in ('p', 's', 'm') if k not in spec_dict]
        if missing:
            raise ValueError(f"ring spec is missing keys: {missing}")
        return cls(
            p=spec_dict['p'],
            s=spec_dict['s'],
            m=spec_dict['m'],
            h=tuple(spec_dict.get('h', ()) or ())
        )


@dataclass(frozen=True)
class ZmodElem:
    """Residue of Z_{p^s} kept in the canonical range [0, modulus)"""
    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"residue {self.value} outside [0, {self.modulus})")

    def _check(self, other: 'ZmodElem') -> None:
        if other.modulus != self.modulus:
            raise RingMismatch(f"Z_{self.modulus} vs Z_{other.modulus}")

    def __add__(self, other: 'ZmodElem') -> 'ZmodElem':
        self._check(other)
        return ZmodElem((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: 'ZmodElem') -> 'ZmodElem':
        self._check(other)
        return ZmodElem((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: 'ZmodElem') -> 'ZmodElem':
        self._check(other)
        return ZmodElem((self.value * other.value) % self.modulus, self.modulus)

    def __neg__(self) -> 'ZmodElem':
        return ZmodElem((-self.value) % self.modulus, self.modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class GrElement:
    """Element sum_i a_i xi^i of R' in the additive basis"""
    coeffs: Tuple[int, ...]
    spec: RingSpec = field(repr=False)

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.spec.m:
            raise ValueError(f"expected {self.spec.m} coefficients, got {len(coeffs)}")
        q = self.spec.modulus
        if any(not 0 <= c < q for c in coeffs):
            raise ValueError(f"coefficients must lie in [0, {q}): {coeffs}")
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"GrElement({self.coeffs} in {self.spec.label})"


@dataclass(frozen=True)
class PadicForm:
    """Digits t_0..t_{s-1} (Teichmuller elements) of alpha = sum_i t_i p^i"""
    digits: Tuple[GrElement, ...]

    def __post_init__(self):
        digits = tuple(self.digits)
        if not digits:
            raise ValueError("a p-adic form needs at least one digit")
        spec = digits[0].spec
        if any(d.spec != spec for d in digits):
            raise RingMismatch("p-adic digits come from different rings")
        if len(digits) != spec.s:
            raise ValueError(f"expected s={spec.s} digits, got {len(digits)}")
        object.__setattr__(self, 'digits', digits)


class ElementClass(Enum):
    """Zero, unit, or zero divisor"""
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero_divisor"


@dataclass(frozen=True)
class BasisIndex:
    """
    Mixed-radix encoding of ring elements as basis-state indices:
    index(x) = sum_i x_i * radix^i, so a_0 is the least-significant digit.
    """
    radix: int
    digits: int

    @property
    def size(self) -> int:
        return self.radix ** self.digits

    @cached_property
    def weights(self) -> np.ndarray:
        return self.radix ** np.arange(self.digits, dtype=np.int64)

    def encode(self, coeffs: Sequence[int]) -> int:
        index = 0
        for c in reversed(coeffs):
            index = index * self.radix + int(c)
        return index

    def decode(self, index: int) -> Tuple[int, ...]:
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside [0, {self.size})")
        digits = []
        for _ in range(self.digits):
            index, d = divmod(index, self.radix)
            digits.append(d)
        return tuple(digits)

    def encode_array(self, coeff_rows: np.ndarray) -> np.ndarray:
        """Indices of every row of an (N, digits) coefficient array"""
        return np.asarray(coeff_rows, dtype=np.int64) @ self.weights

    def decode_array(self, indices: np.ndarray) -> np.ndarray:
        indices = np.asarray(indices, dtype=np.int64)
        return (indices[:, None] // self.weights[None, :]) % self.radix


@dataclass(frozen=True)
class RingContext:
    """Validated ring plus lazily built tables (powers of xi, Teichmuller set, traces)"""
    spec: RingSpec

    def __post_init__(self):
        if not self.spec.is_resolved:
            raise ValueError("RingContext needs a spec with a resolved h; use make_ring")

    # ------------------------------------------------------------------
    # Shape
    # ------------------------------------------------------------------
    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def s(self) -> int:
        return self.spec.s

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def h(self) -> Tuple[int, ...]:
        return self.spec.h

    @property
    def modulus(self) -> int:
        return self.spec.modulus

    @property
    def order(self) -> int:
        return self.spec.order

    @property
    def unit_group_order(self) -> int:
        """Number of units, p^{sm} - p^{(s-1)m}"""
        return self.order - self.p ** ((self.s - 1) * self.m)

    @property
    def zero_divisor_count(self) -> int:
        return self.p ** ((self.s - 1) * self.m) - 1

    @cached_property
    def basis(self) -> BasisIndex:
        return BasisIndex(radix=self.modulus, digits=self.m)

    # ------------------------------------------------------------------
    # Construction of elements
    # ------------------------------------------------------------------
    def element(self, coeffs: Sequence[int]) -> GrElement:
        """Element from coefficients, reduced mod p^s"""
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return GrElement(tuple(int(c) % self.modulus for c in coeffs), self.spec)

    def from_base(self, r: Union[int, ZmodElem]) -> GrElement:
        """Embed r of Z_{p^s} as r * xi^0"""
        return self.element([int(r)] + [0] * (self.m - 1))

    @cached_property
    def zero(self) -> GrElement:
        return self.from_base(0)

    @cached_property
    def one(self) -> GrElement:
        return self.from_base(1)

    @cached_property
    def xi(self) -> GrElement:
        # X reduced mod h; for m = 1 this is -h_0
        return GrElement(poly_reduce([0, 1], self.h, self.modulus), self.spec)

    def index_of(self, a: GrElement) -> int:
        self._check(a)
        return self.basis.encode(a.coeffs)

    def element_at(self, index: int) -> GrElement:
        return GrElement(self.basis.decode(index), self.spec)

    def elements(self) -> Iterator[GrElement]:
        """All p^{sm} elements in basis-index order"""
        for index in range(self.order):
            yield self.element_at(index)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check(self, *elements: GrElement) -> None:
        for a in elements:
            if a.spec != self.spec:
                raise RingMismatch(f"element of {a.spec.label} h={a.spec.h} used in "
                                   f"{self.spec.label} h={self.spec.h}")

    def add(self, a: GrElement, b: GrElement) -> GrElement:
        self._check(a, b)
        q = self.modulus
        return GrElement(tuple((x + y) % q for x, y in zip(a.coeffs, b.coeffs)), self.spec)

    def neg(self, a: GrElement) -> GrElement:
        self._check(a)
        q = self.modulus
        return GrElement(tuple((-x) % q for x in a.coeffs), self.spec)

    def sub(self, a: GrElement, b: GrElement) -> GrElement:
        return self.add(a, self.neg(b))

    def scalar_mul(self, r: Union[int, ZmodElem], a: GrElement) -> GrElement:
        """r * a for r in the base ring"""
        self._check(a)
        q = self.modulus
        r = int(r)
        return GrElement(tuple((r * x) % q for x in a.coeffs), self.spec)

    def mul(self, a: GrElement, b: GrElement) -> GrElement:
        """Polynomial product reduced mod h(X) and mod p^s"""
        self._check(a, b)
        return GrElement(poly_mulmod(a.coeffs, b.coeffs, self.h, self.modulus), self.spec)

    def pow(self, a: GrElement, k: int) -> GrElement:
        """a^k by square-and-multiply; a^0 = 1"""
        self._check(a)
        if k < 0:
            raise ValueError("exponent must be non-negative")
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    # ------------------------------------------------------------------
    # Powers of xi and the Teichmuller set
    # ------------------------------------------------------------------
    @cached_property
    def xi_powers(self) -> Tuple[GrElement, ...]:
        """xi^0 .. xi^{p^m - 2}"""
        powers = [self.one]
        for _ in range(self.spec.teichmuller_order - 1):
            powers.append(self.mul(powers[-1], self.xi))
        return tuple(powers)

    def xi_power(self, k: int) -> GrElement:
        """xi^k, using that xi has order p^m - 1"""
        k %= self.spec.teichmuller_order
        if self.spec.residue_order <= DEFAULT_DIMENSION_CAP:
            return self.xi_powers[k]
        return self.pow(self.xi, k)

    @cached_property
    def teichmuller_set(self) -> Tuple[GrElement, ...]:
        """{0, 1, xi, ..., xi^{p^m - 2}}"""
        return (self.zero,) + self.xi_powers

    @cached_property
    def _teichmuller_by_residue(self) -> Dict[Tuple[int, ...], GrElement]:
        p = self.p
        return {tuple(c % p for c in t.coeffs): t for t in self.teichmuller_set}

    def is_teichmuller(self, t: GrElement) -> bool:
        self._check(t)
        return t.is_zero or self.pow(t, self.spec.teichmuller_order) == self.one

    # ------------------------------------------------------------------
    # Frobenius and trace
    # ------------------------------------------------------------------
    def frobenius(self, a: GrElement, i: int = 1) -> GrElement:
        """phi^i(a), with phi(xi) = xi^p and phi fixing Z_{p^s}"""
        self._check(a)
        if i < 0:
            raise ValueError("Frobenius exponent must be non-negative")
        shift = self.p ** (i % self.m)
        result = self.zero
        for j, a_j in enumerate(a.coeffs):
            if a_j:
                result = self.add(result, self.scalar_mul(a_j, self.xi_power(j * shift)))
        return result

    def trace(self, a: GrElement) -> ZmodElem:
        """Tr(a) = sum_{j<m} phi^j(a), returned as its xi^0 coefficient"""
        total = self.zero
        for j in range(self.m):
            total = self.add(total, self.frobenius(a, j))
        if any(total.coeffs[1:]):
            raise TraceNotInBaseRing(f"Frobenius sum of {a} is {total}")
        return ZmodElem(total.coeffs[0], self.modulus)

    # ------------------------------------------------------------------
    # Units, zero divisors and the p-adic form
    # ------------------------------------------------------------------
    def classify(self, a: GrElement) -> ElementClass:
        self._check(a)
        if a.is_zero:
            return ElementClass.ZERO
        if any(c % self.p for c in a.coeffs):
            return ElementClass.UNIT
        return ElementClass.ZERO_DIVISOR

    def inverse(self, a: GrElement) -> GrElement:
        """Inverse of a unit, a^{|units| - 1}"""
        if self.classify(a) is not ElementClass.UNIT:
            raise NotAUnit(f"{a} is not a unit")
        return self.pow(a, self.unit_group_order - 1)

    def zero_divisor_factor(self, a: GrElement) -> Tuple[int, GrElement]:
        """Write a zero divisor as p^j * unit with j maximal"""
        if self.classify(a) is not ElementClass.ZERO_DIVISOR:
            raise NotAZeroDivisor(f"{a} is not a zero divisor")
        j = min(_valuation(c, self.p) for c in a.coeffs if c)
        divisor = self.p ** j
        return j, GrElement(tuple(c // divisor for c in a.coeffs), self.spec)

    def padic_decompose(self, a: GrElement) -> PadicForm:
        """Teichmuller digits t_0..t_{s-1} with a = sum_i t_i p^i"""
        self._check(a)
        p, q = self.p, self.modulus
        current = a.coeffs
        digits: List[GrElement] = []
        for _ in range(self.s):
            t = self._teichmuller_by_residue[tuple(c % p for c in current)]
            digits.append(t)
            diff = [(c - tc) % q for c, tc in zip(current, t.coeffs)]
            # exact: c and tc agree mod p
            current = tuple(d // p for d in diff)
        return PadicForm(tuple(digits))

    def padic_compose(self, form: PadicForm) -> GrElement:
        self._check(*form.digits)
        total = self.zero
        for i, t in enumerate(form.digits):
            total = self.add(total, self.scalar_mul(self.p ** i, t))
        return total

    # ------------------------------------------------------------------
    # Vectorised views used by the matrix builders
    # ------------------------------------------------------------------
    @cached_property
    def coefficient_array(self) -> np.ndarray:
        """(p^{sm}, m) coefficients of every element, in basis-index order"""
        return self.basis.decode_array(np.arange(self.order, dtype=np.int64))

    def multiplication_matrix(self, alpha: GrElement) -> np.ndarray:
        """m x m matrix M with coeffs(alpha * u) = M @ coeffs(u) mod p^s"""
        self._check(alpha)
        unit_vectors = [self.element([int(i == j) for i in range(self.m)]) for j in range(self.m)]
        columns = [self.mul(alpha, e).coeffs for e in unit_vectors]
        return np.array(columns, dtype=np.int64).T

    def products_index(self, alpha: GrElement) -> np.ndarray:
        """Basis index of alpha * u for every u, in basis-index order"""
        products = (self.coefficient_array @ self.multiplication_matrix(alpha).T) % self.modulus
        return self.basis.encode_array(products)

    @cached_property
    def frobenius_matrix(self) -> np.ndarray:
        """Matrix of phi in the additive basis; column j holds xi^{jp}"""
        columns = [self.xi_power(j * self.p).coeffs for j in range(self.m)]
        return np.array(columns, dtype=np.int64).T

    @cached_property
    def trace_row(self) -> np.ndarray:
        """Tr(xi^j) for j < m, from the operator sum_k phi^k"""
        q = self.modulus
        # object dtype: entries reach m * q^2 before reduction
        phi = self.frobenius_matrix.astype(object)
        operator = np.zeros((self.m, self.m), dtype=object)
        power = np.eye(self.m, dtype=np.int64).astype(object)
        for _ in range(self.m):
            operator = (operator + power) % q
            power = (phi @ power) % q
        if np.any(operator[1:] != 0):
            raise TraceNotInBaseRing("Frobenius-sum operator has nonzero rows beyond xi^0")
        return operator[0].astype(np.int64)

    @cached_property
    def trace_vector(self) -> np.ndarray:
        """Tr(u) for every u in basis-index order"""
        return (self.coefficient_array @ self.trace_row) % self.modulus


def _valuation(value: int, p: int) -> int:
    count = 0
    while value % p == 0:
        value //= p
        count += 1
    return count


@lru_cache(maxsize=None)
def make_ring(spec: RingSpec) -> RingContext:
    """
    Validate a ring spec and return its (cached) context.

    An unresolved spec (empty h) is completed with the lexicographically
    smallest basic primitive polynomial.
    """
    # local import: primitive.py builds on the types defined here
    from .primitive import find_basic_primitive, validate_basic_primitive

    if not spec.is_resolved:
        spec = spec.with_h(find_basic_primitive(spec.p, spec.s, spec.m))
        logger.debug("resolved h=%s for %s", spec.h, spec.label)

    report = validate_basic_primitive(spec)
    if not report.passed:
        raise NotBasicPrimitive(report.first_failure, report)
    logger.debug("built ring context for %s with h=%s", spec.label, spec.h)
    return RingContext(spec)


# ----------------------------------------------------------------------
# Element-level wrappers
# ----------------------------------------------------------------------
def _context(*elements: GrElement) -> RingContext:
    spec = elements[0].spec
    for a in elements[1:]:
        if a.spec != spec:
            raise RingMismatch(f"{spec.label} h={spec.h} vs {a.spec.label} h={a.spec.h}")
    return make_ring(spec)


def gr_add(a: GrElement, b: GrElement) -> GrElement:
    return _context(a, b).add(a, b)


def gr_neg(a: GrElement) -> GrElement:
    return _context(a).neg(a)


def gr_sub(a: GrElement, b: GrElement) -> GrElement:
    return _context(a, b).sub(a, b)


def gr_mul(a: GrElement, b: GrElement) -> GrElement:
    return _context(a, b).mul(a, b)


def gr_pow(a: GrElement, k: int) -> GrElement:
    return _context(a).pow(a, k)


def frobenius(a: GrElement, i: int = 1) -> GrElement:
    return _context(a).frobenius(a, i)


def trace(a: GrElement) -> ZmodElem:
    return _context(a).trace(a)


def classify(a: GrElement) -> ElementClass:
    return _context(a).classify(a)


def gr_inverse(a: GrElement) -> GrElement:
    return _context(a).inverse(a)


def zero_divisor_factor(a: GrElement) -> Tuple[int, GrElement]:
    return _context(a).zero_divisor_factor(a)


def padic_decompose(a: GrElement) -> PadicForm:
    return _context(a).padic_decompose(a)


def padic_compose(form: PadicForm) -> GrElement:
    return _context(*form.digits).padic_compose(form)


def teichmuller_set(ring: RingContext) -> Tuple[GrElement, ...]:
    return ring.teichmuller_set
