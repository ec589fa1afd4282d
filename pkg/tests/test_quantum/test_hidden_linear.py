import numpy as np
import pytest

from src.core import AmbiguousMeasurement
from src.quantum import (
    Oracle,
    draw_hidden,
    make_oracle,
    max_abs_diff,
    qft_direct,
    recover_r,
    run_recovery,
    simulate_with_gate_b,
)


class TestRecovery:
    @pytest.mark.parametrize("ring_name", ["gr4_16", "gf4", "z9", "gf9"])
    def test_recovers_every_multiplier(self, request, ring_name):
        """Zero divisors included"""
        ring = request.getfixturevalue(ring_name)
        F = qft_direct(ring)
        for r in ring.elements():
            oracle = make_oracle(ring, r)
            assert recover_r(ring, oracle, F=F) == r
            assert oracle.queries == 1

    def test_result_fields(self, gr4_16):
        r = gr4_16.element([2, 3])
        result = run_recovery(gr4_16, make_oracle(gr4_16, r))
        assert result.recovered == r
        assert result.queries == 1
        assert result.amplitude == pytest.approx(1.0, abs=1e-9)
        assert result.final_state.register_dims == (16, 16)

    def test_final_state_equals_gate_b(self, gr4_16):
        """The conjugated oracle acts as B_r on |0>|1>"""
        r = gr4_16.xi
        result = run_recovery(gr4_16, make_oracle(gr4_16, r))
        direct = simulate_with_gate_b(gr4_16, r)
        assert max_abs_diff(result.final_state.amplitudes, direct.amplitudes) < 1e-10
        assert direct.dominant()[0] == (gr4_16.index_of(r), gr4_16.index_of(gr4_16.one))

    def test_sampled_larger_ring(self, gr8_64):
        F = qft_direct(gr8_64)
        for seed in range(3):
            r = draw_hidden(gr8_64, seed)
            assert recover_r(gr8_64, make_oracle(gr8_64, r), F=F) == r

    def test_oracle_cannot_be_reused(self, gr4_16):
        oracle = make_oracle(gr4_16, gr4_16.one)
        run_recovery(gr4_16, oracle)
        with pytest.raises(ValueError):
            run_recovery(gr4_16, oracle)

    def test_threshold_failure(self, gr4_16):
        """A threshold no amplitude can meet"""
        with pytest.raises(AmbiguousMeasurement):
            run_recovery(gr4_16, make_oracle(gr4_16, gr4_16.one), threshold=-0.5)


class TestOracle:
    def test_repr_hides_multiplier(self, gr4_16):
        oracle = make_oracle(gr4_16, gr4_16.element([3, 2]))
        assert repr(oracle) == "Oracle(dim=256, queries=0)"
        assert isinstance(oracle, Oracle)
        assert oracle.dim == 256

    def test_query_is_logged(self, gr4_16, mocker):
        logger = mocker.Mock()
        oracle = make_oracle(gr4_16, gr4_16.xi, logger=logger)
        run_recovery(gr4_16, oracle)
        logger.log_query.assert_called_once_with(1, 256)


class TestDrawHidden:
    def test_reproducible(self, gr8_64):
        assert draw_hidden(gr8_64, 5) == draw_hidden(gr8_64, 5)
        draws = {draw_hidden(gr8_64, seed) for seed in range(40)}
        assert len(draws) > 1
        assert all(d.spec == gr8_64.spec for d in draws)
