import math

import numpy as np
import pytest
from hypothesis import given

from seqbell.errors import DegenerateState
from seqbell.linalg import I2, is_projector, partial_trace_second, purity, trace
from seqbell.states import (
    StateAngles, StateKind, density, make_entangled, make_product, maximally_entangled,
)

from conftest import angle

Q = math.pi / 4


def test_entangled_examples():
    s = make_entangled(StateAngles(Q, Q))
    np.testing.assert_allclose(s.ket, np.array([1, -1, 1, 1]) / 2, atol=1e-15)
    np.testing.assert_allclose(partial_trace_second(density(s)), I2 / 2, atol=1e-12)
    s0 = make_entangled(StateAngles(0, 0))
    np.testing.assert_allclose(s0.ket, np.array([0, 0, 1, 1]) / math.sqrt(2), atol=1e-15)
    assert s.kind is StateKind.ENTANGLED


def test_product_examples():
    s = make_product(StateAngles(0, Q))
    np.testing.assert_allclose(s.ket, [0, 0, 1 / math.sqrt(2), 1 / math.sqrt(2)], atol=1e-15)
    s = make_product(StateAngles(math.pi / 2, math.pi / 2))
    np.testing.assert_allclose(s.ket, [1 / math.sqrt(2), 1 / math.sqrt(2), 0, 0], atol=1e-15)


def test_product_null_state_rejected():
    with pytest.raises(DegenerateState):
        make_product(StateAngles(0.0, math.pi / 2))


def test_density_examples():
    rho = density(make_product(StateAngles(0, Q)))
    assert abs(rho[2, 3] - 0.5) < 1e-15
    rho = density(maximally_entangled())
    v = np.array([1, -1, 1, 1]) / 2
    np.testing.assert_allclose(rho, np.outer(v, v), atol=1e-15)
    assert is_projector(rho)


@given(angle, angle)
def test_entangled_always_normalized(a, b):
    s = make_entangled(StateAngles(a, b))
    assert abs(np.linalg.norm(s.ket) - 1) < 1e-12
    assert abs(trace(density(s)) - 1) < 1e-12


def test_product_reduced_state_pure_on_grid():
    for a in np.linspace(-math.pi, math.pi, 25):
        for b in np.linspace(-math.pi, math.pi, 25):
            if math.sin(a) ** 2 + math.cos(b) ** 2 < 1e-6:
                continue
            s = make_product(StateAngles(float(a), float(b)))
            assert abs(purity(partial_trace_second(density(s))) - 1) < 1e-9
