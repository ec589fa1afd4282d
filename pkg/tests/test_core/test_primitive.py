import pytest

from src.core import (
    DimensionCapExceeded,
    RingSpec,
    find_basic_primitive,
    validate_basic_primitive,
)
from src.core.primitive import IRREDUCIBLE, ROOT_ORDER, TEICHMULLER_ROOT


class TestFindBasicPrimitive:
    @pytest.mark.parametrize("p,s,m,expected", [
        (2, 1, 1, (1,)),
        (2, 2, 2, (1, 1)),
        (2, 3, 2, (1, 1)),
        (3, 1, 2, (2, 1)),
        (3, 2, 1, (1,)),
    ])
    def test_lexicographically_smallest(self, p, s, m, expected):
        """Test the first passing h in lexicographic order"""
        assert find_basic_primitive(p, s, m) == expected

    @pytest.mark.timeout(5)
    @pytest.mark.parametrize("p,s,m", [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2), (2, 1, 2), (5, 1, 2)])
    def test_result_validates(self, p, s, m):
        h = find_basic_primitive(p, s, m)
        assert len(h) == m
        assert validate_basic_primitive(RingSpec(p, s, m, h)).passed

    def test_dimension_cap(self):
        with pytest.raises(DimensionCapExceeded):
            find_basic_primitive(2, 2, 2, cap=8)


class TestValidateBasicPrimitive:
    def test_report_shape(self):
        report = validate_basic_primitive(RingSpec(2, 2, 2, (1, 1)))
        assert report.passed
        assert report.first_failure is None
        assert [c.name for c in report.checks] == [IRREDUCIBLE, ROOT_ORDER, TEICHMULLER_ROOT]

        as_dict = report.to_dict()
        assert as_dict['ring'] == {'p': 2, 's': 2, 'm': 2, 'h': [1, 1]}
        assert as_dict['passed'] is True
        assert len(as_dict['checks']) == 3

    def test_reducible(self):
        """X^2 + 1 = (X + 1)^2 mod 2"""
        report = validate_basic_primitive(RingSpec(2, 1, 2, (1, 0)))
        assert not report.passed
        assert report.first_failure == IRREDUCIBLE

    def test_irreducible_but_not_primitive(self):
        """X^2 + 1 is irreducible mod 3 but X has order 4, not 8"""
        report = validate_basic_primitive(RingSpec(3, 1, 2, (1, 0)))
        assert report.first_failure == ROOT_ORDER
        assert report.checks[0].passed

    def test_primitive_mod_p_only(self):
        """X^2 + 3X + 1 over Z_4 reduces to a primitive polynomial, but xi^3 = 3"""
        report = validate_basic_primitive(RingSpec(2, 2, 2, (1, 3)))
        assert report.first_failure == TEICHMULLER_ROOT
        assert report.checks[1].passed

    def test_unresolved_spec(self):
        with pytest.raises(ValueError):
            validate_basic_primitive(RingSpec(2, 2, 2))
