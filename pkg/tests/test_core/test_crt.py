import pytest

from src.core import CrtDecomposition, crt_decompose


class TestCrtDecompose:
    def test_twelve(self):
        decomposition = crt_decompose(12)
        assert decomposition.factors == ((2, 2), (3, 1))
        assert decomposition.components == (4, 3)
        assert decomposition.statement == "Z_12 ≅ Z_4 ⊕ Z_3"

    def test_prime_power(self):
        assert crt_decompose(7).statement == "Z_7"
        assert crt_decompose(8).components == (8,)

    def test_to_dict(self):
        as_dict = crt_decompose(360).to_dict()
        assert as_dict['n'] == 360
        assert [f['component'] for f in as_dict['factors']] == [8, 9, 5]
        assert as_dict['statement'] == "Z_360 ≅ Z_8 ⊕ Z_9 ⊕ Z_5"

    def test_split(self):
        """x -> (x mod n_i) is a bijection onto the component residues"""
        decomposition = crt_decompose(360)
        assert decomposition.split(17) == (1, 8, 2)
        assert len({decomposition.split(x) for x in range(360)}) == 360

    @pytest.mark.parametrize("n", [1, 0, -6, True, 2.5])
    def test_invalid(self, n):
        with pytest.raises(ValueError):
            crt_decompose(n)

    def test_is_frozen(self):
        decomposition = crt_decompose(6)
        assert isinstance(decomposition, CrtDecomposition)
        with pytest.raises(Exception):
            decomposition.n = 7
