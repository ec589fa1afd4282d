import pytest
from sympy import Matrix

from src.core import (
    DiscriminantMatrix,
    NotInvertible,
    OperationCounter,
    RingSpec,
    ShapeMismatch,
    TraceTable,
    apply_D,
    apply_D_inverse,
    build_discriminant,
    companion_matrix,
    find_basic_primitive,
    invert_mod,
    kernel_is_trivial,
    make_ring,
    matvec_mod,
    trace_table,
    trace_table_recursive,
    xi_power,
    xi_power_recursive,
)


class TestPowersOfXi:
    def test_companion_matrix(self, gr4_16):
        """Column j holds xi^{j+1}; the last column is -h"""
        assert companion_matrix(gr4_16) == ((0, 3), (1, 3))

    @pytest.mark.parametrize("ring_name", ["gr4_16", "gr8_64", "gf9", "z9"])
    def test_power_routes_agree(self, request, ring_name):
        ring = request.getfixturevalue(ring_name)
        for k in range(2 * ring.spec.residue_order):
            assert xi_power(ring, k) == xi_power_recursive(ring, k)
            assert xi_power(ring, k) == ring.pow(ring.xi, k)

    def test_negative_power(self, gr4_16):
        with pytest.raises(ValueError):
            xi_power(gr4_16, -1)


class TestTraceTable:
    def test_gr4_16(self, gr4_16):
        table = trace_table(gr4_16)
        assert table.values == (2, 3, 3)
        assert len(table) == 3
        assert table[0] == 2
        assert table.to_dict() == {'modulus': 4, 'values': [2, 3, 3]}

    def test_gf4(self, gf4):
        assert trace_table(gf4).values == (0, 1, 1)

    @pytest.mark.parametrize("ring_name", ["gr4_16", "gr8_64", "gf9", "z9", "gf4"])
    def test_routes_agree(self, request, ring_name):
        ring = request.getfixturevalue(ring_name)
        assert trace_table_recursive(ring) == trace_table(ring, cross_check=False).values

    def test_first_entry_is_m(self, gr8_64, z9):
        assert trace_table(gr8_64)[0] == 2
        assert trace_table(z9).values == (1,)

    def test_validation(self):
        with pytest.raises(ValueError):
            TraceTable((2, 3), modulus=4, m=2)
        with pytest.raises(ValueError):
            TraceTable((1, 3, 3), modulus=4, m=2)


class TestInvertMod:
    def test_against_sympy(self):
        """Cross-check Gauss-Jordan against sympy's inv_mod"""
        M = [[2, 3], [3, 3]]
        expected = Matrix(M).inv_mod(4)
        assert invert_mod(M, 4) == tuple(tuple(int(v) for v in row) for row in expected.tolist())

    def test_needs_row_swap(self):
        M = [[0, 1], [1, 1]]
        assert invert_mod(M, 2) == ((1, 1), (1, 0))

    def test_larger_matrix(self):
        M = [[1, 2, 3], [0, 1, 4], [5, 6, 0]]
        inverse = invert_mod(M, 9)
        expected = Matrix(M).inv_mod(9)
        assert inverse == tuple(tuple(int(v) for v in row) for row in expected.tolist())

    def test_singular(self):
        with pytest.raises(NotInvertible):
            invert_mod([[2, 0], [0, 1]], 4)

    def test_not_square(self):
        with pytest.raises(ShapeMismatch):
            invert_mod([[1, 2, 3], [0, 1, 4]], 9)


class TestDiscriminantMatrix:
    def test_gr4_16(self, gr4_16):
        D = build_discriminant(gr4_16)
        assert D.entries == ((2, 3), (3, 3))
        assert D.inverse == ((3, 1), (1, 2))
        assert D.m == 2
        assert D.to_dict() == {'modulus': 4, 'entries': [[2, 3], [3, 3]], 'inverse': [[3, 1], [1, 2]]}

    def test_gf4(self, gf4):
        D = build_discriminant(gf4)
        assert D.entries == ((0, 1), (1, 1))
        assert D.inverse == ((1, 1), (1, 0))

    def test_rejects_non_hankel(self):
        with pytest.raises(ValueError):
            eye = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
            DiscriminantMatrix(eye, eye, 4)

    def test_rejects_wrong_inverse(self):
        with pytest.raises(ValueError):
            DiscriminantMatrix(((2, 3), (3, 3)), ((1, 0), (0, 1)), 4)

    def test_kernel_is_trivial(self, gr4_16, gr8_64):
        assert kernel_is_trivial(build_discriminant(gr4_16))
        assert kernel_is_trivial(build_discriminant(gr8_64))


class TestApplyD:
    def test_coefficients_are_traces(self, gr8_64):
        """(D x)_i = Tr(x xi^i)"""
        D = build_discriminant(gr8_64)
        for x in gr8_64.elements():
            image = apply_D(gr8_64, x, D)
            expected = tuple(int(gr8_64.trace(gr8_64.mul(x, gr8_64.xi_power(i)))) for i in range(2))
            assert image.coeffs == expected

    def test_inverse_roundtrip(self, gr4_16):
        D = build_discriminant(gr4_16)
        for x in gr4_16.elements():
            assert apply_D_inverse(gr4_16, apply_D(gr4_16, x, D), D) == x

    def test_operation_count(self, gr4_16):
        """One application costs m^2 multiplications"""
        counter = OperationCounter()
        apply_D(gr4_16, gr4_16.xi, counter=counter)
        assert counter.multiplications == 4
        counter.reset()
        assert counter.multiplications == 0 and counter.additions == 0

    @pytest.mark.parametrize("p,s,m", [(3, 2, 1), (2, 2, 2), (2, 2, 3), (2, 1, 4)])
    def test_operation_count_grows_as_m_squared(self, p, s, m):
        ring = make_ring(RingSpec(p, s, m, find_basic_primitive(p, s, m)))
        counter = OperationCounter()
        apply_D(ring, ring.one, counter=counter)
        assert counter.multiplications == m * m
        assert counter.additions == m * m

    def test_matvec_shape(self):
        with pytest.raises(ShapeMismatch):
            matvec_mod([[1, 2], [3, 4]], [1, 2, 3], 5)
