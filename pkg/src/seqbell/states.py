"""
Shared two-qubit pure states used in the CHSH scenarios.

Note on naming: ``alpha`` and ``beta`` here are the two real state angles.
They are unrelated to the degeneracy labels that index the rank-1
projectors inside one eigenspace (see :mod:`seqbell.observables`, where
those are simply the ``first``/``second`` elements of a pair).
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import DegenerateState
from .linalg import TOL, as_ket, outer

PURITY_TOL = 1e-9


class StateKind(str, Enum):
    ENTANGLED = "entangled"
    PRODUCT = "product"


@dataclass(frozen=True)
class StateAngles:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError("state angles must be finite")


@dataclass(frozen=True, eq=False)
class SharedState:
    kind: StateKind
    angles: StateAngles
    ket: np.ndarray

    def __repr__(self):
        return (f"SharedState(kind={self.kind.value}, alpha={self.angles.alpha!r}, "
                f"beta={self.angles.beta!r})")

    @property
    def rho(self):
        return density(self)


def make_entangled(angles):
    """(sin a, -sin b, cos b, cos a) / sqrt(2).

    Normalized for every pair of angles; maximally entangled at
    ``alpha = beta = pi/4``.
    """
    a, b = angles.alpha, angles.beta
    v = np.array([math.sin(a), -math.sin(b), math.cos(b), math.cos(a)], dtype=complex)
    return SharedState(StateKind.ENTANGLED, angles, as_ket(v / math.sqrt(2)))


def make_product(angles):
    """N (sin a, sin a, cos b, cos b), i.e. (sin a|0> + cos b|1>) (x) |+>.

    Raises
    ------
    DegenerateState
        If ``sin(a)^2 + cos(b)^2`` is below ``1e-12``.
    """
    a, b = angles.alpha, angles.beta
    s = math.sin(a) ** 2 + math.cos(b) ** 2
    if s < TOL:
        raise DegenerateState(
            f"product state is null for alpha={a!r}, beta={b!r}")
    n = (2.0 * s) ** -0.5
    v = n * np.array([math.sin(a), math.sin(a), math.cos(b), math.cos(b)], dtype=complex)
    # renormalize to absorb rounding in n
    return SharedState(StateKind.PRODUCT, angles, as_ket(v, normalize=True))


def make_state(kind, alpha, beta):
    kind = StateKind(kind)
    angles = StateAngles(float(alpha), float(beta))
    if kind is StateKind.ENTANGLED:
        return make_entangled(angles)
    return make_product(angles)


def density(s):
    """Density matrix |psi><psi| of a shared state."""
    return outer(s.ket)


def maximally_entangled():
    return make_entangled(StateAngles(math.pi / 4, math.pi / 4))


def one_plus_product():
    """The product state |1> (x) |+>, reached at alpha = 0, beta = pi/4."""
    return make_product(StateAngles(0.0, math.pi / 4))
