import pytest

from src.core import (
    BasisIndex,
    DimensionCapExceeded,
    ElementClass,
    NotAUnit,
    NotAZeroDivisor,
    NotBasicPrimitive,
    NotPrime,
    PadicForm,
    RingMismatch,
    RingSpec,
    ZmodElem,
    classify,
    ensure_dimension,
    frobenius,
    gr_add,
    gr_inverse,
    gr_mul,
    gr_neg,
    gr_pow,
    gr_sub,
    make_ring,
    padic_compose,
    padic_decompose,
    teichmuller_set,
    trace,
    zero_divisor_factor,
)


class TestRingSpec:
    def test_derived_sizes(self):
        """Test characteristic, cardinality and label"""
        spec = RingSpec(2, 2, 2, (1, 1))
        assert spec.modulus == 4
        assert spec.order == 16
        assert spec.residue_order == 4
        assert spec.teichmuller_order == 3
        assert spec.label == "GR(4,16)"
        assert spec.is_resolved

    def test_non_prime_base(self):
        """Test that a composite p is rejected"""
        with pytest.raises(NotPrime) as excinfo:
            RingSpec(4, 1, 2, (1, 1))
        assert excinfo.value.p == 4

        with pytest.raises(NotPrime):
            RingSpec(1, 1, 1)

    @pytest.mark.parametrize("s,m", [(0, 1), (1, 0), (-1, 2)])
    def test_non_positive_exponents(self, s, m):
        with pytest.raises(ValueError):
            RingSpec(2, s, m)

    def test_non_integer_parameters(self):
        with pytest.raises(ValueError):
            RingSpec(2.0, 1, 1)
        with pytest.raises(ValueError):
            RingSpec(True, 1, 1)

    def test_h_reduced_and_checked(self):
        """Test h reduction mod p^s and length validation"""
        assert RingSpec(2, 2, 2, (5, -3)).h == (1, 1)
        assert not RingSpec(2, 2, 2).is_resolved
        with pytest.raises(ValueError):
            RingSpec(2, 2, 2, (1,))

    def test_dict_roundtrip(self):
        spec = RingSpec(3, 1, 2, (2, 1))
        assert spec.to_dict() == {'p': 3, 's': 1, 'm': 2, 'h': [2, 1]}
        assert RingSpec.from_dict(spec.to_dict()) == spec
        with pytest.raises(ValueError):
            RingSpec.from_dict({'p': 3, 's': 1})


class TestMakeRing:
    def test_resolves_missing_h(self):
        """Test that an empty h is completed by the search"""
        ring = make_ring(RingSpec(2, 2, 2))
        assert ring.h == (1, 1)

    def test_reducible_polynomial(self):
        with pytest.raises(NotBasicPrimitive) as excinfo:
            make_ring(RingSpec(2, 2, 2, (1, 0)))
        assert excinfo.value.failed_check == "irreducible_mod_p"
        assert not excinfo.value.report.passed

    def test_root_not_teichmuller(self):
        """X^2 + 3X + 1 is primitive mod 2 but xi^3 = 3 over Z_4"""
        with pytest.raises(NotBasicPrimitive) as excinfo:
            make_ring(RingSpec(2, 2, 2, (1, 3)))
        assert excinfo.value.failed_check == "teichmuller_root"

    def test_context_is_cached(self):
        spec = RingSpec(2, 2, 2, (1, 1))
        assert make_ring(spec) is make_ring(spec)


class TestArithmetic:
    def test_xi_and_its_powers(self, gr4_16):
        """Test xi^2 = 3 + 3 xi and xi^3 = 1 in GR(4,16)"""
        xi = gr4_16.xi
        assert xi.coeffs == (0, 1)
        assert gr4_16.mul(xi, xi).coeffs == (3, 3)
        assert gr4_16.pow(xi, 3) == gr4_16.one
        assert gr4_16.pow(xi, 0) == gr4_16.one
        assert gr4_16.xi_power(7) == xi

    def test_xi_for_degree_one(self, z9):
        """For m = 1 and h = X + 1, xi = -1"""
        assert z9.xi.coeffs == (8,)
        assert z9.pow(z9.xi, 2) == z9.one

    def test_add_sub_neg(self, gr4_16):
        a = gr4_16.element([1, 2])
        b = gr4_16.element([3, 3])
        assert gr4_16.add(a, b).coeffs == (0, 1)
        assert gr4_16.sub(a, b).coeffs == (2, 3)
        assert gr4_16.neg(a).coeffs == (3, 2)
        assert gr4_16.scalar_mul(ZmodElem(2, 4), b).coeffs == (2, 2)

    def test_element_reduces_coefficients(self, gr4_16):
        assert gr4_16.element([5, -1]).coeffs == (1, 3)
        with pytest.raises(ValueError):
            gr4_16.element([1, 2, 3])

    def test_ring_mismatch(self, gr4_16, gf4):
        with pytest.raises(RingMismatch):
            gr4_16.add(gr4_16.one, gf4.one)
        with pytest.raises(RingMismatch):
            gr_mul(gr4_16.xi, gf4.xi)

    def test_negative_exponent(self, gr4_16):
        with pytest.raises(ValueError):
            gr4_16.pow(gr4_16.xi, -1)

    def test_module_level_wrappers(self, gr4_16):
        a = gr4_16.element([1, 2])
        b = gr4_16.element([3, 3])
        assert gr_add(a, b) == gr4_16.add(a, b)
        assert gr_sub(a, b) == gr4_16.sub(a, b)
        assert gr_neg(a) == gr4_16.neg(a)
        assert gr_mul(a, b) == gr4_16.mul(a, b)
        assert gr_pow(a, 5) == gr4_16.pow(a, 5)

    def test_repr_names_the_ring(self, gr4_16):
        assert repr(gr4_16.xi) == "GrElement((0, 1) in GR(4,16))"


class TestFrobeniusAndTrace:
    def test_frobenius_of_xi(self, gr4_16):
        """phi(xi) = xi^p"""
        assert frobenius(gr4_16.xi) == gr4_16.pow(gr4_16.xi, 2)

    def test_frobenius_order(self, gr4_16):
        for a in gr4_16.elements():
            assert gr4_16.frobenius(a, gr4_16.m) == a
            assert gr4_16.frobenius(a, 0) == a

    def test_frobenius_fixes_base_ring(self, gr8_64):
        for r in range(8):
            assert gr8_64.frobenius(gr8_64.from_base(r)) == gr8_64.from_base(r)

    def test_frobenius_is_multiplicative(self, gf9):
        elements = list(gf9.elements())
        for a in elements:
            for b in elements[:5]:
                assert gf9.frobenius(gf9.mul(a, b)) == gf9.mul(gf9.frobenius(a), gf9.frobenius(b))

    def test_trace_values(self, gr4_16):
        """Tr(1) = 2, Tr(xi) = Tr(xi^2) = 3 in GR(4,16)"""
        assert trace(gr4_16.one) == ZmodElem(2, 4)
        assert int(gr4_16.trace(gr4_16.xi)) == 3
        assert int(gr4_16.trace(gr4_16.pow(gr4_16.xi, 2))) == 3

    def test_trace_is_identity_for_m1(self, z9):
        for a in z9.elements():
            assert int(z9.trace(a)) == a.coeffs[0]

    def test_trace_vector_matches_trace(self, gr8_64):
        for index, a in enumerate(gr8_64.elements()):
            assert int(gr8_64.trace_vector[index]) == int(gr8_64.trace(a))

    def test_trace_row_on_large_modulus(self):
        """Frobenius products reach 2^62 over Z_{2^31}; Tr(1) = 2, Tr(xi) = -1"""
        q = 2 ** 31
        ring = make_ring(RingSpec(2, 31, 2, (1, 1)))
        assert ring.trace_row.tolist() == [2, q - 1]
        assert int(ring.trace(ring.xi)) == q - 1


class TestElementClasses:
    @pytest.mark.parametrize("coeffs,expected", [
        ((0, 0), ElementClass.ZERO),
        ((1, 0), ElementClass.UNIT),
        ((3, 2), ElementClass.UNIT),
        ((2, 0), ElementClass.ZERO_DIVISOR),
        ((2, 2), ElementClass.ZERO_DIVISOR),
    ])
    def test_classify(self, gr4_16, coeffs, expected):
        assert classify(gr4_16.element(coeffs)) is expected

    def test_partition_counts(self, gr4_16, gr8_64):
        """|units| = p^{sm} - p^{(s-1)m}, |zero divisors| = p^{(s-1)m} - 1"""
        for ring in (gr4_16, gr8_64):
            classes = [ring.classify(a) for a in ring.elements()]
            assert classes.count(ElementClass.UNIT) == ring.unit_group_order
            assert classes.count(ElementClass.ZERO_DIVISOR) == ring.zero_divisor_count
        assert gr4_16.unit_group_order == 12
        assert gr4_16.zero_divisor_count == 3

    def test_field_has_no_zero_divisors(self, gf9):
        assert all(gf9.classify(a) is not ElementClass.ZERO_DIVISOR for a in gf9.elements())

    def test_inverse(self, gr4_16):
        assert gr_inverse(gr4_16.xi).coeffs == (3, 3)
        for a in gr4_16.elements():
            if gr4_16.classify(a) is ElementClass.UNIT:
                assert gr4_16.mul(a, gr4_16.inverse(a)) == gr4_16.one

    def test_inverse_of_non_unit(self, gr4_16):
        with pytest.raises(NotAUnit):
            gr4_16.inverse(gr4_16.element([2, 0]))
        with pytest.raises(NotAUnit):
            gr4_16.inverse(gr4_16.zero)

    def test_zero_divisor_factor(self, gr4_16, gr8_64):
        j, unit = zero_divisor_factor(gr4_16.element([2, 2]))
        assert j == 1 and unit.coeffs == (1, 1)

        j, unit = gr8_64.zero_divisor_factor(gr8_64.element([4, 0]))
        assert j == 2 and unit.coeffs == (1, 0)

        j, unit = gr8_64.zero_divisor_factor(gr8_64.element([4, 2]))
        assert j == 1 and unit.coeffs == (2, 1)
        assert gr8_64.classify(unit) is ElementClass.UNIT

    def test_zero_divisor_factor_rejects_units(self, gr4_16):
        with pytest.raises(NotAZeroDivisor):
            gr4_16.zero_divisor_factor(gr4_16.one)


class TestTeichmullerAndPadic:
    def test_teichmuller_set(self, gr4_16):
        """{0, 1, xi, xi^2} with distinct residues mod p"""
        T = teichmuller_set(gr4_16)
        assert len(T) == 4
        assert T[0] == gr4_16.zero and T[1] == gr4_16.one
        residues = {tuple(c % 2 for c in t.coeffs) for t in T}
        assert len(residues) == 4
        assert all(gr4_16.is_teichmuller(t) for t in T)
        assert not gr4_16.is_teichmuller(gr4_16.element([2, 0]))

    @pytest.mark.parametrize("ring_name", ["gr4_16", "gr8_64", "z9", "gf9"])
    def test_padic_roundtrip(self, request, ring_name):
        ring = request.getfixturevalue(ring_name)
        teichmuller = set(ring.teichmuller_set)
        for a in ring.elements():
            form = padic_decompose(a)
            assert len(form.digits) == ring.s
            assert all(t in teichmuller for t in form.digits)
            assert padic_compose(form) == a

    def test_units_have_nonzero_leading_digit(self, gr4_16):
        for a in gr4_16.elements():
            t0 = gr4_16.padic_decompose(a).digits[0]
            assert (gr4_16.classify(a) is ElementClass.UNIT) == (not t0.is_zero)

    def test_padic_form_validation(self, gr4_16, gf4):
        with pytest.raises(ValueError):
            PadicForm((gr4_16.one,))
        with pytest.raises(RingMismatch):
            PadicForm((gr4_16.one, gf4.one))


class TestBasisIndex:
    def test_encode_decode(self):
        """a_0 is the least-significant digit"""
        basis = BasisIndex(radix=4, digits=2)
        assert basis.size == 16
        assert basis.encode((1, 2)) == 9
        assert basis.decode(9) == (1, 2)
        with pytest.raises(ValueError):
            basis.decode(16)

    def test_array_forms(self, gr4_16):
        basis = gr4_16.basis
        coeffs = gr4_16.coefficient_array
        assert coeffs.shape == (16, 2)
        assert basis.encode_array(coeffs).tolist() == list(range(16))
        assert basis.decode_array([9]).tolist() == [[1, 2]]

    def test_index_of_element_at(self, gr8_64):
        for index in (0, 1, 17, 63):
            assert gr8_64.index_of(gr8_64.element_at(index)) == index


class TestZmodElem:
    def test_operations(self):
        a, b = ZmodElem(3, 4), ZmodElem(2, 4)
        assert (a + b).value == 1
        assert (a - b).value == 1
        assert (a * b).value == 2
        assert (-a).value == 1
        assert int(a) == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            ZmodElem(4, 4)
        with pytest.raises(RingMismatch):
            ZmodElem(1, 4) + ZmodElem(1, 8)


class TestDimensionCap:
    def test_ensure_dimension(self):
        ensure_dimension(16, 16)
        with pytest.raises(DimensionCapExceeded) as excinfo:
            ensure_dimension(17, 16)
        assert excinfo.value.dim == 17
        assert excinfo.value.cap == 16
