"""
Shared fixtures: the small rings most tests run on and a suite
configuration with reduced sample sizes.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.core import RingSpec, make_ring
from src.utils.config import SuiteConfig

GR4_16 = RingSpec(2, 2, 2, (1, 1))
GF4 = RingSpec(2, 1, 2, (1, 1))
Z9 = RingSpec(3, 2, 1, (1,))
GR8_64 = RingSpec(2, 3, 2, (1, 1))
GF9 = RingSpec(3, 1, 2, (2, 1))


@pytest.fixture
def gr4_16():
    """GR(4,16) with h(X) = X^2 + X + 1"""
    return make_ring(GR4_16)


@pytest.fixture
def gf4():
    return make_ring(GF4)


@pytest.fixture
def z9():
    return make_ring(Z9)


@pytest.fixture
def gr8_64():
    return make_ring(GR8_64)


@pytest.fixture
def gf9():
    return make_ring(GF9)


@pytest.fixture
def quick_config():
    """Suite configuration with small samples"""
    return SuiteConfig.from_dict({
        'rings': [GR4_16.to_dict()],
        'sampling': {
            'seed': 3,
            'random_pairs': 300,
            'axiom_samples': 60,
            'hidden_linear_samples': 3
        }
    })
