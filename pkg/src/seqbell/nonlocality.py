"""
Factorization of Alice's rotated fine projectors for A1 = sigma_x (x) I.

Inside A1's +1 eigenspace the canonical kets are |+>|1> and |+>|0>, so a
rotation by eta only touches Bob's factor:

    A'1_{1+} = A_{1+} (x) C(eta),    A'2_{1+} = A_{1+} (x) (I - C(eta))

with A_{1+} = (I + sigma_x)/2 on Alice and C(eta) a rank-1 projector on
Bob. The -1 eigenspace factorizes the same way with A_{1-} = (I - sigma_x)/2
and C(gamma); that half is an extension checked here alongside.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import ParamOutOfRange
from .linalg import I2, SX, max_abs, tensor
from .observables import AliceSetting, ContextBasisParams, rotated_family

NONTRIVIAL_TOL = 1e-9


def _check(name, v):
    if not (math.isfinite(v) and 0.0 <= v <= 1.0):
        raise ParamOutOfRange(f"{name} = {v!r} is outside [0, 1]")


def c_plus(eta1):
    """eta sqrt(1-eta^2) sigma_x + (1-eta^2)|0><0| + eta^2 |1><1|."""
    _check("eta1", eta1)
    e = float(eta1)
    s = math.sqrt(1.0 - e * e)
    return e * s * SX + np.diag([1.0 - e * e, e * e]).astype(complex)


c_minus = c_plus  # same construction, evaluated at gamma1


def distance_from_scalar(m):
    """Max-abs distance of a 2x2 matrix from the nearest multiple of I."""
    return max_abs(m - (np.trace(m) / 2) * I2)


@dataclass(frozen=True, eq=False)
class FactorizationReport:
    eta1: float
    c_plus: np.ndarray
    residual_first: float
    residual_second: float
    bob_side_nontrivial: bool
    gamma1: float | None = None
    residual_minus_first: float | None = None
    residual_minus_second: float | None = None

    @property
    def max_residual(self):
        rs = [self.residual_first, self.residual_second,
              self.residual_minus_first, self.residual_minus_second]
        return max(r for r in rs if r is not None)


def verify_factorization(eta1, gamma1=None):
    """Compare A1's rotated fine projectors with their Alice (x) Bob factorizations.

    ``gamma1`` additionally checks the -1 eigenspace.
    """
    gamma = 1.0 if gamma1 is None else gamma1
    fam = rotated_family(AliceSetting.A1, ContextBasisParams(eta1, gamma))
    a_plus = (I2 + SX) / 2
    c = c_plus(eta1)
    r1 = max_abs(fam.fine[1][0] - tensor(a_plus, c))
    r2 = max_abs(fam.fine[1][1] - tensor(a_plus, I2 - c))
    extra = {}
    if gamma1 is not None:
        a_minus = (I2 - SX) / 2
        cm = c_minus(gamma1)
        extra = dict(
            gamma1=gamma1,
            residual_minus_first=max_abs(fam.fine[-1][0] - tensor(a_minus, cm)),
            residual_minus_second=max_abs(fam.fine[-1][1] - tensor(a_minus, I2 - cm)),
        )
    return FactorizationReport(
        eta1=float(eta1), c_plus=c, residual_first=r1, residual_second=r2,
        bob_side_nontrivial=distance_from_scalar(c) > NONTRIVIAL_TOL, **extra)


def factorization_grid(points=101):
    return [verify_factorization(float(e), float(e)) for e in np.linspace(0.0, 1.0, points)]
