import math

import numpy as np
import pytest
from hypothesis import strategies as st

from seqbell.observables import BasisParams, ContextBasisParams

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
angle = st.floats(min_value=-2 * math.pi, max_value=2 * math.pi, allow_nan=False)
context_params = st.builds(ContextBasisParams, unit, unit)
basis_params = st.builds(BasisParams, context_params, context_params, context_params,
                         context_params)


def random_ket(rng, dim=4):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density(rng, rank=None, dim=4):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    r = g @ g.conj().T
    return r / np.trace(r)


def random_params(rng):
    return BasisParams.from_sequence(rng.uniform(size=8))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
