import numpy as np
import pytest

from src.core import ShapeMismatch
from src.quantum import (
    PermutationMap,
    dagger,
    identity,
    matmul,
    max_abs_diff,
    tensor,
    unitarity_deviation,
)


@pytest.fixture
def cycle():
    """|0> -> |1> -> |2> -> |0>"""
    return PermutationMap(3, np.array([1, 2, 0]))


class TestPermutationMap:
    def test_validation(self):
        with pytest.raises(ValueError):
            PermutationMap(3, np.array([0, 0, 1]))
        with pytest.raises(ShapeMismatch):
            PermutationMap(3, np.array([0, 1]))

    def test_apply_matches_dense(self, cycle):
        vector = np.array([1.0, 2.0, 3.0], dtype=np.complex128)
        assert np.allclose(cycle.apply(vector), [3.0, 1.0, 2.0])
        assert np.allclose(cycle.to_dense() @ vector, cycle.apply(vector))

    def test_dense_layout(self, cycle):
        """Column i has its 1 in row mapping[i]"""
        dense = cycle.to_dense()
        assert dense[1, 0] == 1 and dense[2, 1] == 1 and dense[0, 2] == 1
        assert dense.sum() == 3

    def test_compose_and_inverse(self, cycle):
        swap = PermutationMap(3, np.array([1, 0, 2]))
        composed = cycle.compose(swap)
        assert np.allclose(composed.to_dense(), cycle.to_dense() @ swap.to_dense())
        assert cycle.compose(cycle.inverse()).is_identity()
        assert cycle.inverse().equals(cycle.compose(cycle))
        assert not cycle.is_identity()

    def test_compose_dimension_mismatch(self, cycle):
        with pytest.raises(ShapeMismatch):
            cycle.compose(PermutationMap(2, np.array([1, 0])))

    def test_apply_dimension_mismatch(self, cycle):
        with pytest.raises(ShapeMismatch):
            cycle.apply(np.ones(4))

    def test_mapping_is_read_only(self, cycle):
        with pytest.raises(ValueError):
            cycle.mapping[0] = 2

    def test_to_dict(self, cycle):
        assert cycle.to_dict() == {'dim': 3, 'map': [1, 2, 0]}


class TestMatrixHelpers:
    def test_tensor_first_factor_most_significant(self):
        A = np.array([[0, 1], [1, 0]], dtype=np.complex128)
        B = np.diag([1.0, 2.0, 3.0]).astype(np.complex128)
        assert np.array_equal(tensor([A, B]), np.kron(A, B))
        assert tensor([A, B]).shape == (6, 6)
        assert np.array_equal(tensor([A]), A)

    def test_tensor_rejects_bad_input(self):
        with pytest.raises(ShapeMismatch):
            tensor([])
        with pytest.raises(ShapeMismatch):
            tensor([np.ones((2, 3))])

    def test_matmul_and_dagger(self):
        A = np.array([[1, 1j], [0, 2]], dtype=np.complex128)
        assert np.array_equal(matmul(A, identity(2)), A)
        assert np.array_equal(dagger(A), np.array([[1, 0], [-1j, 2]]))
        with pytest.raises(ShapeMismatch):
            matmul(A, identity(3))

    def test_max_abs_diff(self):
        assert max_abs_diff(identity(2), identity(2)) == 0.0
        assert max_abs_diff(identity(2), 3 * identity(2)) == pytest.approx(2.0)
        with pytest.raises(ShapeMismatch):
            max_abs_diff(identity(2), identity(3))

    def test_unitarity_deviation(self):
        assert unitarity_deviation(identity(4)) == 0.0
        assert unitarity_deviation(2 * identity(2)) == pytest.approx(3.0)
        assert unitarity_deviation(PermutationMap(3, [2, 0, 1]).to_dense()) == 0.0
