"""
CHSH observables and their projector families.

Alice's observables are degenerate on the two-qubit space, so each outcome
has a rank-2 "coarse" projector (what the Lueders rule uses) and a pair of
rank-1 "fine" projectors that split it (what the von Neumann rule uses).
The fine split is not unique; :func:`rotated_family` parametrizes it by one
real number per eigenspace.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import ParamOutOfRange
from .linalg import I2, I4, SX, SZ, TOL, max_abs, outer, tensor

OUTCOMES = (1, -1)


class AliceSetting(str, Enum):
    A1 = "A1"
    A2 = "A2"


class BobSetting(str, Enum):
    B1 = "B1"
    B2 = "B2"


@dataclass(frozen=True, eq=False)
class ProjectorFamily:
    """Outcome structure of a dichotomic observable.

    ``coarse`` maps each outcome to its eigenspace projector. ``fine`` maps
    each outcome to an ordered pair of rank-1 projectors summing to the
    coarse one, or is ``None`` for families that are only ever measured
    with the Lueders rule (Bob's).
    """

    observable: np.ndarray
    coarse: dict
    fine: dict | None = None

    def fine_projectors(self):
        if self.fine is None:
            raise ValueError("family has no fine projectors")
        return [p for m in OUTCOMES for p in self.fine[m]]

    def check(self, tol=TOL):
        """Return the worst residual over the family's structural identities."""
        worst = max_abs(sum(self.coarse.values()) - I4)
        worst = max(worst, max_abs(sum(m * self.coarse[m] for m in OUTCOMES) - self.observable))
        if self.fine is not None:
            for m in OUTCOMES:
                worst = max(worst, max_abs(self.fine[m][0] + self.fine[m][1] - self.coarse[m]))
            ps = self.fine_projectors()
            for i, p in enumerate(ps):
                worst = max(worst, max_abs(p @ p - p))
                for q in ps[i + 1:]:
                    worst = max(worst, max_abs(p @ q))
        return worst


@dataclass(frozen=True)
class ContextBasisParams:
    """Rotation of Alice's fine basis inside the +1 (eta) and -1 (gamma) eigenspaces."""

    eta: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        for name in ("eta", "gamma"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and 0.0 <= v <= 1.0):
                raise ParamOutOfRange(f"{name} = {v!r} is outside [0, 1]")


# Flat parameter names, in the order used for 8-tuples everywhere
# (CLI --params, sweeps, optimizer vectors).
PARAM_NAMES = ("eta1", "gamma1", "eta1p", "gamma1p", "eta2", "gamma2", "eta2p", "gamma2p")
CONTEXTS = (("A1", "B1"), ("A1", "B2"), ("A2", "B1"), ("A2", "B2"))


@dataclass(frozen=True)
class BasisParams:
    """Alice's fine-basis choice for each of the four CHSH correlations."""

    a1b1: ContextBasisParams = ContextBasisParams()
    a1b2: ContextBasisParams = ContextBasisParams()
    a2b1: ContextBasisParams = ContextBasisParams()
    a2b2: ContextBasisParams = ContextBasisParams()

    @classmethod
    def from_sequence(cls, values):
        values = [float(v) for v in values]
        if len(values) != 8:
            raise ValueError(f"expected 8 basis parameters, got {len(values)}")
        ctx = [ContextBasisParams(values[i], values[i + 1]) for i in range(0, 8, 2)]
        return cls(*ctx)

    @classmethod
    def from_names(cls, **kw):
        """Build from flat names, e.g. ``BasisParams.from_names(eta1=0.98, gamma1p=0.2)``.

        Names not given default to 1.
        """
        unknown = set(kw) - set(PARAM_NAMES)
        if unknown:
            raise ValueError(f"unknown basis parameter(s): {sorted(unknown)}")
        return cls.from_sequence([kw.get(n, 1.0) for n in PARAM_NAMES])

    def as_tuple(self):
        return (self.a1b1.eta, self.a1b1.gamma, self.a1b2.eta, self.a1b2.gamma,
                self.a2b1.eta, self.a2b1.gamma, self.a2b2.eta, self.a2b2.gamma)

    def as_dict(self):
        return dict(zip(PARAM_NAMES, self.as_tuple()))

    def replace(self, name, value):
        d = self.as_dict()
        if name not in d:
            raise ValueError(f"unknown basis parameter {name!r}")
        d[name] = value
        return BasisParams.from_names(**d)

    def context(self, alice, bob):
        return getattr(self, f"{AliceSetting(alice).value}{BobSetting(bob).value}".lower())


def chsh_observables():
    """Return ``(A1, A2, B1, B2)`` as 4x4 matrices on Alice (x) Bob."""
    s2 = math.sqrt(2)
    a1 = tensor(SX, I2)
    a2 = tensor(SZ, I2)
    b1 = tensor(I2, (SZ - SX) / s2)
    b2 = tensor(I2, (SZ + SX) / s2)
    return a1, a2, b1, b2


def _observable(which):
    a1, a2, b1, b2 = chsh_observables()
    return {"A1": a1, "A2": a2, "B1": b1, "B2": b2}[getattr(which, "value", which)]


_S = 1 / math.sqrt(2)

# Ordered eigenvectors: outcome -> (first, second).
_CANONICAL_KETS = {
    AliceSetting.A1: {
        1: (np.array([0, 1, 0, 1]) * _S, np.array([1, 0, 1, 0]) * _S),
        -1: (np.array([0, -1, 0, 1]) * _S, np.array([-1, 0, 1, 0]) * _S),
    },
    AliceSetting.A2: {
        1: (np.array([0, 1, 0, 0]), np.array([1, 0, 0, 0])),
        -1: (np.array([0, 0, 0, 1]), np.array([0, 0, 1, 0])),
    },
}


def canonical_kets(which):
    kets = _CANONICAL_KETS[AliceSetting(which)]
    return {m: tuple(np.asarray(k, dtype=complex) for k in kets[m]) for m in OUTCOMES}


def rotated_kets(which, p):
    """Fine eigenvectors after rotating each eigenspace by ``p.eta`` / ``p.gamma``."""
    base = canonical_kets(which)
    out = {}
    for m, c in ((1, p.eta), (-1, p.gamma)):
        first, second = base[m]
        s = math.sqrt(max(0.0, 1.0 - c * c))
        out[m] = (c * first + s * second, s * first - c * second)
    return out


def _family_from_kets(which, kets):
    fine = {m: tuple(outer(k) for k in kets[m]) for m in OUTCOMES}
    coarse = {m: fine[m][0] + fine[m][1] for m in OUTCOMES}
    return ProjectorFamily(_observable(which), coarse, fine)


def canonical_family(which):
    """Family built from the standard eigenvectors of A1 or A2."""
    return _family_from_kets(which, canonical_kets(which))


def rotated_family(which, p):
    """Family whose fine projectors are rotated within each eigenspace.

    ``p = ContextBasisParams(1, 1)`` reproduces :func:`canonical_family`.
    The coarse projectors do not depend on ``p``.
    """
    if not isinstance(p, ContextBasisParams):
        p = ContextBasisParams(*p)
    return _family_from_kets(which, rotated_kets(which, p))


def coarse_family(observable):
    """Lueders-only family (I +/- O)/2 for a dichotomic observable."""
    o = np.asarray(observable, dtype=complex)
    return ProjectorFamily(o, {1: (I4 + o) / 2, -1: (I4 - o) / 2})


def bob_family(which):
    return coarse_family(_observable(BobSetting(which)))
