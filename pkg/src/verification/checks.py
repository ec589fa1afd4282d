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
# File:    src/verification/checks.py
# Description:
#   Executable checks of the ring, trace, discriminant, character and QFT
#   identities. Each check returns one CheckResult.
#
# ---------------------------------------------------------------------------

"""
Checks are plain functions of a CheckContext registered under a name with
@register_check. run_check() wraps every call the same way: it times the
call, turns DimensionCapExceeded into a SKIPPED entry naming the cap, and
turns any other exception into a FAILED entry carrying the message, so one
broken check never aborts a run.

Randomised checks draw from numpy.random.default_rng(seed); the seed is
recorded in the result.
"""

from dataclasses import dataclass, field
from functools import cached_property
import logging
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from ..core.discriminant import (
    DiscriminantMatrix,
    apply_D,
    build_discriminant,
    kernel_is_trivial,
    trace_table,
    trace_table_recursive,
    xi_power,
    xi_power_recursive,
)
from ..core.exceptions import DimensionCapExceeded
from ..core.ring import ElementClass, GrElement, RingContext, RingSpec, ensure_dimension, make_ring
from ..quantum.hidden_linear import make_oracle, run_recovery, simulate_with_gate_b
from ..quantum.matrices import dagger, max_abs_diff, unitarity_deviation
from ..quantum.qft import (
    character_exponents,
    gate_A_map,
    gate_B_map,
    permutation_map_UD,
    qft_base,
    qft_direct,
    qft_factored,
    qft_finite_field,
    roots_of_unity,
    shift_map,
)
from ..utils.config import SuiteConfig
from .report import CheckResult, CheckStatus

logger = logging.getLogger(__name__)


@dataclass
class CheckOutcome:
    passed: bool
    max_deviation: float = 0.0
    details: Dict = field(default_factory=dict)
    message: Optional[str] = None


@dataclass
class CheckContext:
    """A ring spec, the suite settings, and matrices shared between checks"""
    spec: RingSpec
    config: SuiteConfig = field(default_factory=SuiteConfig)

    @property
    def seed(self) -> int:
        return self.config.sampling.seed

    @property
    def tolerances(self):
        return self.config.tolerances

    @property
    def sampling(self):
        return self.config.sampling

    @property
    def cap(self) -> int:
        return self.config.limits.dimension_cap

    @property
    def gate_cap(self) -> int:
        return self.config.limits.gate_dimension_cap

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    @cached_property
    def ring(self) -> RingContext:
        return make_ring(self.spec)

    @cached_property
    def exponents(self) -> np.ndarray:
        return character_exponents(self.ring, self.cap)

    @cached_property
    def characters(self) -> np.ndarray:
        return roots_of_unity(self.ring.modulus)[self.exponents]

    @cached_property
    def F(self) -> np.ndarray:
        return qft_direct(self.ring, self.cap)

    @cached_property
    def D(self) -> DiscriminantMatrix:
        return build_discriminant(self.ring)

    def sample_elements(self, rng: np.random.Generator, count: int) -> List[GrElement]:
        coeffs = rng.integers(0, self.ring.modulus, size=(count, self.ring.m))
        return [self.ring.element(row.tolist()) for row in coeffs]


CheckFunction = Callable[[CheckContext], CheckOutcome]
CHECKS: Dict[str, CheckFunction] = {}


def register_check(name: str) -> Callable[[CheckFunction], CheckFunction]:
    def decorator(fn: CheckFunction) -> CheckFunction:
        if name in CHECKS:
            raise ValueError(f"check {name!r} registered twice")
        CHECKS[name] = fn
        return fn
    return decorator


def run_check(name: str, context: CheckContext) -> CheckResult:
    """Run one registered check and wrap its outcome"""
    fn = CHECKS[name]
    start = time.perf_counter()
    try:
        outcome = fn(context)
        status = CheckStatus.PASSED if outcome.passed else CheckStatus.FAILED
        result = CheckResult(
            name=name,
            ring=context.spec,
            status=status,
            max_deviation=outcome.max_deviation,
            seed=context.seed,
            details=outcome.details,
            message=outcome.message
        )
    except DimensionCapExceeded as e:
        result = CheckResult(
            name=name,
            ring=context.spec,
            status=CheckStatus.SKIPPED,
            seed=context.seed,
            details={'dim': e.dim, 'cap': e.cap},
            message=f"skipped: dimension {e.dim} exceeds cap {e.cap}"
        )
    except Exception as e:
        logger.debug("check %s raised on %s", name, context.spec.label, exc_info=True)
        result = CheckResult(
            name=name,
            ring=context.spec,
            status=CheckStatus.FAILED,
            seed=context.seed,
            message=f"{type(e).__name__}: {e}"
        )
    result.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return result


def _count_failures(flags) -> int:
    return sum(1 for ok in flags if not ok)


# ----------------------------------------------------------------------
# Ring arithmetic
# ----------------------------------------------------------------------
@register_check("ring_axioms")
def _ring_axioms(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    rng = ctx.rng()
    k = ctx.sampling.axiom_samples
    xs, ys, zs = (ctx.sample_elements(rng, k) for _ in range(3))

    violations = 0
    for x, y, z in zip(xs, ys, zs):
        violations += _count_failures([
            R.add(R.add(x, y), z) == R.add(x, R.add(y, z)),
            R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)),
            R.add(x, y) == R.add(y, x),
            R.mul(x, y) == R.mul(y, x),
            R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)),
            R.add(x, R.zero) == x,
            R.mul(x, R.one) == x,
            R.add(x, R.neg(x)) == R.zero,
        ])
    return CheckOutcome(violations == 0, float(violations), {'samples': k, 'violations': violations})


@register_check("frobenius_automorphism")
def _frobenius_automorphism(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    rng = ctx.rng()
    k = ctx.sampling.axiom_samples
    xs, ys = ctx.sample_elements(rng, k), ctx.sample_elements(rng, k)
    bases = rng.integers(0, R.modulus, size=k).tolist()

    violations = _count_failures([R.frobenius(R.xi) == R.pow(R.xi, R.p)])
    for x, y, r in zip(xs, ys, bases):
        violations += _count_failures([
            R.frobenius(R.mul(x, y)) == R.mul(R.frobenius(x), R.frobenius(y)),
            R.frobenius(R.add(x, y)) == R.add(R.frobenius(x), R.frobenius(y)),
            R.frobenius(x, R.m) == x,
            R.frobenius(R.from_base(r)) == R.from_base(r),
        ])
    return CheckOutcome(violations == 0, float(violations), {'samples': k, 'violations': violations})


@register_check("trace_properties")
def _trace_properties(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    rng = ctx.rng()
    k = ctx.sampling.axiom_samples
    xs, ys = ctx.sample_elements(rng, k), ctx.sample_elements(rng, k)
    bases = rng.integers(0, R.modulus, size=k).tolist()

    violations = 0
    for x, y, r in zip(xs, ys, bases):
        violations += _count_failures([
            int(R.trace(R.add(x, y))) == (int(R.trace(x)) + int(R.trace(y))) % R.modulus,
            R.trace(R.frobenius(x)) == R.trace(x),
            int(R.trace(R.scalar_mul(r, x))) == (r * int(R.trace(x))) % R.modulus,
            int(R.trace(R.from_base(r))) == (R.m * r) % R.modulus,
        ])
    details = {'samples': k, 'violations': violations}

    if R.order <= ctx.cap:
        image = np.unique(R.trace_vector)
        surjective = image.size == R.modulus
        # the matrix route must agree with the Frobenius sum
        route_mismatch = sum(
            int(R.trace_vector[R.index_of(x)]) != int(R.trace(x)) for x in xs[:64]
        )
        details.update({'image_size': int(image.size), 'route_mismatches': route_mismatch})
        violations += int(not surjective) + route_mismatch
    else:
        details['surjectivity'] = f"not checked: {R.order} elements exceed cap {ctx.cap}"
    return CheckOutcome(violations == 0, float(violations), details)


@register_check("element_partition")
def _element_partition(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    ensure_dimension(R.order, ctx.cap)
    counts = {cls: 0 for cls in ElementClass}
    annihilator = R.from_base(R.p ** (R.s - 1))
    violations = 0
    for a in R.elements():
        cls = R.classify(a)
        counts[cls] += 1
        t0 = R.padic_decompose(a).digits[0]
        if (cls is ElementClass.UNIT) != (not t0.is_zero):
            violations += 1
        if cls is ElementClass.UNIT and R.mul(a, R.inverse(a)) != R.one:
            violations += 1
        if cls is ElementClass.ZERO_DIVISOR and not R.mul(a, annihilator).is_zero:
            violations += 1

    expected = {
        ElementClass.ZERO: 1,
        ElementClass.UNIT: R.unit_group_order,
        ElementClass.ZERO_DIVISOR: R.zero_divisor_count,
    }
    count_errors = sum(abs(counts[c] - expected[c]) for c in ElementClass)
    details = {c.value: counts[c] for c in ElementClass}
    details['violations'] = violations
    passed = violations == 0 and count_errors == 0
    return CheckOutcome(passed, float(violations + count_errors), details)


@register_check("zero_divisor_factorization")
def _zero_divisor_factorization(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    ensure_dimension(R.order, ctx.cap)
    checked = violations = 0
    for a in R.elements():
        if R.classify(a) is not ElementClass.ZERO_DIVISOR:
            continue
        checked += 1
        j, unit = R.zero_divisor_factor(a)
        violations += _count_failures([
            1 <= j <= R.s - 1,
            R.classify(unit) is ElementClass.UNIT,
            R.scalar_mul(R.p ** j, unit) == a,
        ])
    return CheckOutcome(violations == 0, float(violations),
                        {'zero_divisors': checked, 'violations': violations})


@register_check("padic_roundtrip")
def _padic_roundtrip(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    ensure_dimension(R.order, ctx.cap)
    teichmuller = set(R.teichmuller_set)
    violations = _count_failures([
        len(teichmuller) == R.spec.residue_order,
        all(R.is_teichmuller(t) for t in teichmuller),
    ])
    for a in R.elements():
        form = R.padic_decompose(a)
        violations += _count_failures([
            R.padic_compose(form) == a,
            all(t in teichmuller for t in form.digits),
        ])
    return CheckOutcome(violations == 0, float(violations),
                        {'teichmuller_size': len(teichmuller), 'violations': violations})


# ----------------------------------------------------------------------
# Trace table and discriminant
# ----------------------------------------------------------------------
@register_check("trace_table_routes")
def _trace_table_routes(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    frobenius_route = trace_table(R, cross_check=False).values
    recursive_route = trace_table_recursive(R)
    mismatches = sum(a != b for a, b in zip(frobenius_route, recursive_route))

    power_mismatches = 0
    for k in range(2 * R.m - 1):
        power_mismatches += _count_failures([
            xi_power(R, k) == xi_power_recursive(R, k),
            xi_power(R, k) == R.pow(R.xi, k),
        ])
    # xi^{p^m - 1} = 1 closes the Teichmuller cycle
    power_mismatches += _count_failures([R.pow(R.xi, R.spec.teichmuller_order) == R.one])

    total = mismatches + power_mismatches
    return CheckOutcome(total == 0, float(total), {
        'frobenius_route': list(frobenius_route),
        'recursive_route': list(recursive_route),
        'power_mismatches': power_mismatches,
    })


@register_check("discriminant_invertible")
def _discriminant_invertible(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    D = ctx.D
    details = {'entries': [list(row) for row in D.entries], 'inverse': [list(row) for row in D.inverse]}
    violations = 0

    if R.modulus ** R.m <= ctx.cap:
        trivial = kernel_is_trivial(D, ctx.cap)
        details['kernel_trivial'] = trivial
        violations += int(not trivial)

    if R.order <= ctx.cap:
        forward = permutation_map_UD(R, D)           # raises if D x is not a bijection
        backward = permutation_map_UD(R, D, inverse=True)
        details['bijective'] = True
        violations += _count_failures([
            forward.inverse().equals(backward),
            backward.compose(forward).is_identity(),
        ])

    rng = ctx.rng()
    for x in ctx.sample_elements(rng, min(ctx.sampling.axiom_samples, 200)):
        image = apply_D(R, x, D)
        expected = tuple(int(R.trace(R.mul(x, R.xi_power(i)))) for i in range(R.m))
        violations += int(image.coeffs != expected)

    details['violations'] = violations
    return CheckOutcome(violations == 0, float(violations), details)


@register_check("bilinear_trace")
def _bilinear_trace(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    D = np.array(ctx.D.entries, dtype=np.int64)
    q = R.modulus

    if R.order <= ctx.sampling.exhaustive_pair_limit:
        coeffs = R.coefficient_array
        bilinear = (coeffs @ D @ coeffs.T) % q
        mismatches = int(np.count_nonzero(bilinear != ctx.exponents))
        pairs, mode = R.order ** 2, "exhaustive"
    else:
        rng = ctx.rng()
        pairs, mode = ctx.sampling.random_pairs, "sampled"
        # Python ints: x_i D_ij y_j reaches q^3
        xs = rng.integers(0, q, size=(pairs, R.m)).astype(object)
        ys = rng.integers(0, q, size=(pairs, R.m)).astype(object)
        bilinear = (((xs @ D.astype(object)) % q) * ys).sum(axis=1) % q
        trace_row = [int(t) for t in R.trace_row]
        mismatches = 0
        for x_row, y_row, value in zip(xs, ys, bilinear):
            # Tr(x y) through the Frobenius-sum row, independent of D
            product = R.mul(R.element(list(x_row)), R.element(list(y_row)))
            direct = sum(t * c for t, c in zip(trace_row, product.coeffs)) % q
            mismatches += int(direct != int(value))

    return CheckOutcome(mismatches == 0, float(mismatches),
                        {'pairs': pairs, 'mode': mode, 'mismatches': mismatches})


# ----------------------------------------------------------------------
# Characters
# ----------------------------------------------------------------------
@register_check("character_sum")
def _character_sum(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    n = R.order
    sums = ctx.characters.sum(axis=1)
    expected = np.zeros(n, dtype=np.complex128)
    expected[R.index_of(R.zero)] = n
    deviation = float(np.max(np.abs(sums - expected)))
    tolerance = ctx.tolerances.character_sum * n
    return CheckOutcome(deviation < tolerance, deviation, {
        'sum_at_zero': float(sums[0].real),
        'max_nonzero_alpha': float(np.max(np.abs(sums[1:]))) if n > 1 else 0.0,
        'tolerance': tolerance,
    })


@register_check("character_sum_by_class")
def _character_sum_by_class(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    n, q = R.order, R.modulus
    tolerance = ctx.tolerances.character_sum * n
    sums = ctx.characters.sum(axis=1)

    deviations = {'zero': 0.0, 'one': 0.0, 'unit': 0.0, 'zero_divisor': 0.0, 'zero_divisor_factored': 0.0}
    counts = {'unit': 0, 'zero_divisor': 0}
    one_index = R.index_of(R.one)

    for index, alpha in enumerate(R.elements()):
        cls = R.classify(alpha)
        if cls is ElementClass.ZERO:
            deviations['zero'] = abs(sums[index] - n)
            continue
        magnitude = float(abs(sums[index]))
        if index == one_index:
            deviations['one'] = magnitude
        if cls is ElementClass.UNIT:
            counts['unit'] += 1
            deviations['unit'] = max(deviations['unit'], magnitude)
        else:
            counts['zero_divisor'] += 1
            deviations['zero_divisor'] = max(deviations['zero_divisor'], magnitude)
            # alpha = p^j alpha': the same sum over Z_{p^{s-j}} with Tr(alpha' u)
            j, unit = R.zero_divisor_factor(alpha)
            reduced_modulus = R.p ** (R.s - j)
            exponents = R.trace_vector[R.products_index(unit)] % reduced_modulus
            reduced = roots_of_unity(reduced_modulus)[exponents].sum()
            deviations['zero_divisor_factored'] = max(deviations['zero_divisor_factored'], float(abs(reduced)))

    # alpha = 1 through the trace fibers: sum_i |Tr^{-1}(i)| omega^i
    fibers = np.bincount(R.trace_vector, minlength=q)
    coset_sum = complex(np.dot(fibers, roots_of_unity(q)))
    coset_gap = float(abs(coset_sum - sums[one_index]))

    deviation = max(max(float(v) for v in deviations.values()), coset_gap)
    passed = (
        deviation < tolerance
        and counts['unit'] == R.unit_group_order
        and counts['zero_divisor'] == R.zero_divisor_count
    )
    details = {f"{k}_deviation": float(v) for k, v in deviations.items()}
    details.update({'units': counts['unit'], 'zero_divisors': counts['zero_divisor'],
                    'coset_route_gap': coset_gap})
    return CheckOutcome(passed, deviation, details)


@register_check("trace_kernel")
def _trace_kernel(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    ensure_dimension(R.order, ctx.cap)
    fibers = np.bincount(R.trace_vector, minlength=R.modulus)
    expected = R.p ** ((R.m - 1) * R.s)
    deviation = int(np.max(np.abs(fibers - expected)))
    return CheckOutcome(deviation == 0, float(deviation), {
        'kernel_size': int(fibers[0]),
        'expected': expected,
        'fiber_sizes': sorted(set(int(f) for f in fibers)),
    })


@register_check("orthonormality")
def _orthonormality(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    n = R.order
    X = ctx.characters
    if n <= ctx.sampling.orthonormal_exhaustive_limit:
        gram = (X @ X.conj().T) / n
        deviation = max_abs_diff(gram, np.eye(n))
        pairs, mode = n * n, "exhaustive"
    else:
        rng = ctx.rng()
        pairs, mode = ctx.sampling.random_pairs, "sampled"
        a = rng.integers(0, n, size=pairs)
        b = rng.integers(0, n, size=pairs)
        inner = np.einsum('ku,ku->k', X[a], X[b].conj()) / n
        deviation = float(np.max(np.abs(inner - (a == b))))
    tolerance = ctx.tolerances.character_sum
    return CheckOutcome(deviation < tolerance, deviation, {'pairs': pairs, 'mode': mode})


# ----------------------------------------------------------------------
# QFT matrices
# ----------------------------------------------------------------------
@register_check("unitarity")
def _unitarity(ctx: CheckContext) -> CheckOutcome:
    deviation = unitarity_deviation(ctx.F)
    return CheckOutcome(deviation < ctx.tolerances.matrix, deviation, {'dim': ctx.ring.order})


@register_check("factorization")
def _factorization(ctx: CheckContext) -> CheckOutcome:
    factored = qft_factored(ctx.ring, ctx.D, ctx.cap)
    deviation = max_abs_diff(ctx.F, factored)
    return CheckOutcome(deviation < ctx.tolerances.matrix, deviation, {'dim': ctx.ring.order})


@register_check("shift_diagonalization")
def _shift_diagonalization(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    F, Fd, X = ctx.F, dagger(ctx.F), ctx.characters
    if R.order <= ctx.sampling.shift_exhaustive_limit:
        indices, mode = list(range(R.order)), "exhaustive"
    else:
        rng = ctx.rng()
        # alpha = 0 and alpha = 1 always, the rest drawn
        drawn = rng.integers(0, R.order, size=ctx.sampling.shift_samples).tolist()
        indices = sorted({0, R.index_of(R.one)} | set(drawn))
        mode = "sampled"

    deviation = 0.0
    for index in indices:
        alpha = R.element_at(index)
        S = shift_map(R, alpha)
        # (F S_alpha)[:, u] = F[:, u + alpha]
        conjugated = F[:, S.mapping] @ Fd
        deviation = max(deviation, max_abs_diff(conjugated, np.diag(X[index])))
    return CheckOutcome(deviation < ctx.tolerances.matrix, deviation,
                        {'alphas': len(indices), 'mode': mode})


@register_check("control_inversion")
def _control_inversion(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    n = R.order
    ensure_dimension(n * n, ctx.gate_cap)
    F, Fd = ctx.F, dagger(ctx.F)
    left = np.kron(Fd, F)
    right = np.kron(F, Fd)

    deviation = 0.0
    for r in R.elements():
        A = gate_A_map(R, r, ctx.cap)
        B = gate_B_map(R, r, ctx.cap)
        conjugated = left[:, A.mapping] @ right
        deviation = max(deviation, max_abs_diff(conjugated, B.to_dense()))
    return CheckOutcome(deviation < ctx.tolerances.two_register, deviation,
                        {'multipliers': n, 'dim': n * n})


@register_check("reductions")
def _reductions(ctx: CheckContext) -> CheckOutcome:
    p, s, m = ctx.spec.p, ctx.spec.s, ctx.spec.m
    details = {}

    base_ring = make_ring(RingSpec(p, s, 1))
    m1_gap = max_abs_diff(qft_direct(base_ring, ctx.cap), qft_base(p, s, ctx.cap))
    details['m1_ring'] = base_ring.spec.label
    details['m1_deviation'] = m1_gap

    field_ring = make_ring(RingSpec(p, 1, m))
    field_qft = qft_finite_field(field_ring, ctx.cap)
    s1_gap = max(
        max_abs_diff(qft_direct(field_ring, ctx.cap), field_qft),
        max_abs_diff(qft_factored(field_ring, cap=ctx.cap), field_qft),
    )
    details['s1_ring'] = field_ring.spec.label
    details['s1_deviation'] = s1_gap

    passed = m1_gap < ctx.tolerances.reduction and s1_gap < ctx.tolerances.matrix
    return CheckOutcome(passed, max(m1_gap, s1_gap), details)


# ----------------------------------------------------------------------
# Hidden multiplier recovery
# ----------------------------------------------------------------------
@register_check("hidden_linear_recovery")
def _hidden_linear_recovery(ctx: CheckContext) -> CheckOutcome:
    R = ctx.ring
    ensure_dimension(R.order * R.order, ctx.cap * ctx.cap)
    if R.order <= ctx.sampling.hidden_linear_exhaustive_limit:
        multipliers, mode = list(R.elements()), "exhaustive"
    else:
        rng = ctx.rng()
        multipliers = ctx.sample_elements(rng, ctx.sampling.hidden_linear_samples)
        mode = "sampled"

    F = ctx.F
    wrong = 0
    extra_queries = 0
    min_amplitude = 1.0
    gate_b_gap = 0.0
    for r in multipliers:
        oracle = make_oracle(R, r, ctx.cap)
        result = run_recovery(R, oracle, F=F, threshold=ctx.tolerances.measurement, cap=ctx.cap)
        wrong += int(result.recovered != r)
        extra_queries += abs(result.queries - 1)
        min_amplitude = min(min_amplitude, result.amplitude)
        direct = simulate_with_gate_b(R, r, ctx.cap)
        gate_b_gap = max(gate_b_gap, max_abs_diff(result.final_state.amplitudes, direct.amplitudes))

    deviation = max(1.0 - min_amplitude, gate_b_gap, 0.0)
    passed = (
        wrong == 0
        and extra_queries == 0
        and 1.0 - min_amplitude <= ctx.tolerances.measurement
        and gate_b_gap < ctx.tolerances.two_register
    )
    return CheckOutcome(passed, deviation, {
        'multipliers': len(multipliers),
        'mode': mode,
        'wrong': wrong,
        'min_amplitude': min_amplitude,
        'gate_b_gap': gate_b_gap,
    })


# ----------------------------------------------------------------------
# Named entry points
# ----------------------------------------------------------------------
def _run(name: str, ring, config: Optional[SuiteConfig]) -> CheckResult:
    spec = ring.spec if isinstance(ring, RingContext) else ring
    return run_check(name, CheckContext(spec, config or SuiteConfig()))


def check_character_sum(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("character_sum", ring, config)


def check_character_sum_by_class(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("character_sum_by_class", ring, config)


def check_trace_kernel(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("trace_kernel", ring, config)


def check_orthonormality(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("orthonormality", ring, config)


def check_shift_diagonalization(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("shift_diagonalization", ring, config)


def check_control_inversion(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("control_inversion", ring, config)


def check_factorization(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("factorization", ring, config)


def check_unitarity(ring, config: Optional[SuiteConfig] = None) -> CheckResult:
    return _run("unitarity", ring, config)


def check_reductions(p: int, s: int, m: int, config: Optional[SuiteConfig] = None) -> CheckResult:
    """m = 1 and s = 1 reductions for the given parameters"""
    return run_check("reductions", CheckContext(RingSpec(p, s, m), config or SuiteConfig()))
