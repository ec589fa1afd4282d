import pytest

from src.core.polynomial import (
    find_factor_mod_p,
    monic_polynomials,
    poly_mul,
    poly_mulmod,
    poly_powmod,
    poly_reduce,
    poly_rem,
    root_order_mod_p,
)


class TestPolynomialArithmetic:
    def test_poly_mul(self):
        assert poly_mul([1, 1], [1, 1], 4) == [1, 2, 1]
        assert poly_mul([1, 1], [1, 1], 2) == [1, 0, 1]
        assert poly_mul([], [1], 4) == []

    def test_poly_reduce(self):
        """X^2 = -X - 1 modulo X^2 + X + 1"""
        assert poly_reduce([0, 0, 1], (1, 1), 4) == (3, 3)
        assert poly_reduce([2], (1, 1), 4) == (2, 0)

    def test_poly_mulmod_and_powmod(self):
        assert poly_mulmod([0, 1], [0, 1], (1, 1), 4) == (3, 3)
        assert poly_powmod([0, 1], 3, (1, 1), 4) == (1, 0)
        assert poly_powmod([0, 1], 0, (1, 1), 4) == (1, 0)
        with pytest.raises(ValueError):
            poly_powmod([0, 1], -1, (1, 1), 4)

    def test_poly_rem(self):
        """X^2 + 1 = (X + 1)^2 over F_2"""
        assert poly_rem([1, 0, 1], [1, 1], 2) == [0]
        assert poly_rem([1, 1, 1], [1, 1], 2) == [1]


class TestFactorSearch:
    def test_monic_polynomials(self):
        assert list(monic_polynomials(2, 1)) == [[0, 1], [1, 1]]
        assert len(list(monic_polynomials(3, 2))) == 9

    def test_find_factor(self):
        assert find_factor_mod_p((1, 0), 2) == [1, 1]
        assert find_factor_mod_p((1, 1), 2) is None
        assert find_factor_mod_p((2, 1), 3) is None
        assert find_factor_mod_p((1, 1, 0, 1), 2) is not None

    def test_root_order(self):
        assert root_order_mod_p((1, 1), 2, limit=3) == 3
        assert root_order_mod_p((2, 1), 3, limit=8) == 8
        assert root_order_mod_p((1, 0), 3, limit=8) == 4
        assert root_order_mod_p((1, 0), 3, limit=3) is None
