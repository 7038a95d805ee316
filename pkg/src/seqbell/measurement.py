"""
State-update rules and sequential joint statistics.

Alice measures first with either the Lueders rule (project onto each
eigenspace) or the von Neumann rule (project onto each rank-1 eigenvector
of a chosen basis); Bob then measures his coarse projectors. Bob's
measurement is terminal, so no post-Bob state is formed.
"""

from dataclasses import dataclass
from enum import Enum
import itertools

import numpy as np

from .errors import InvalidDensity, InvalidDistribution
from .linalg import TOL, as_matrix, is_hermitian, max_abs
from .observables import OUTCOMES

CLAMP_TOL = 1e-12
NORM_TOL = 1e-10


class UpdateRule(str, Enum):
    LUEDERS = "lueders"
    VON_NEUMANN = "von-neumann"


@dataclass(frozen=True)
class JointDistribution:
    """Probabilities ``probs[(m, n)]`` for Alice outcome m and Bob outcome n."""

    probs: dict

    def __getitem__(self, key):
        return self.probs[key]

    def expectation(self):
        return float(sum(m * n * p for (m, n), p in self.probs.items()))


def validate_density(rho, tol=TOL):
    """Check ``rho`` is hermitian, unit trace and PSD; return it as an array."""
    try:
        r = as_matrix(rho)
    except ValueError as e:
        raise InvalidDensity(str(e)) from None
    if not is_hermitian(r, tol):
        raise InvalidDensity("density matrix is not hermitian")
    t = np.trace(r)
    if abs(t - 1.0) > 1e-10:
        raise InvalidDensity(f"density matrix has trace {t!r}")
    if np.min(np.linalg.eigvalsh(r)) < -1e-10:
        raise InvalidDensity("density matrix is not positive semidefinite")
    return r


def lueders_update(rho, fam):
    """Non-selective Lueders update: sum over outcomes of P_m rho P_m."""
    r = validate_density(rho)
    return sum(fam.coarse[m] @ r @ fam.coarse[m] for m in OUTCOMES)


def von_neumann_update(rho, fam):
    """Non-selective von Neumann update over all four fine projectors."""
    r = validate_density(rho)
    return sum(p @ r @ p for p in fam.fine_projectors())


def _alice_branch(r, alice, m, rule):
    """Unnormalized post-measurement operator for Alice outcome ``m``."""
    if rule is UpdateRule.LUEDERS:
        p = alice.coarse[m]
        return p @ r @ p
    return sum(p @ r @ p for p in alice.fine[m])


def _clamp(p, where):
    if p < -CLAMP_TOL:
        raise InvalidDistribution(f"negative probability {p!r} for outcome {where}")
    return max(p, 0.0)


def joint_distribution(rho, alice, bob, rule):
    """Sequential joint distribution P(m, n): Alice first, then Bob."""
    rule = UpdateRule(rule)
    r = validate_density(rho)
    probs = {}
    for m in OUTCOMES:
        branch = _alice_branch(r, alice, m, rule)
        for n in OUTCOMES:
            p = float(np.real(np.trace(branch @ bob.coarse[n])))
            probs[(m, n)] = _clamp(p, (m, n))
    total = sum(probs.values())
    if abs(total - 1.0) > NORM_TOL:
        raise InvalidDistribution(f"distribution sums to {total!r}")
    return JointDistribution(probs)


def joint_distribution_via_update(rho, alice, bob, rule):
    """Same as :func:`joint_distribution` but through the selective updates.

    Each Alice outcome produces a normalized conditional state; Bob's
    statistics are computed on it and reweighted. Agrees with the direct
    path by linearity of the trace.
    """
    rule = UpdateRule(rule)
    r = validate_density(rho)
    probs = {}
    for m in OUTCOMES:
        branch = _alice_branch(r, alice, m, rule)
        pm = float(np.real(np.trace(branch)))
        for n in OUTCOMES:
            if pm <= CLAMP_TOL:
                probs[(m, n)] = 0.0
                continue
            cond = branch / pm
            probs[(m, n)] = _clamp(pm * float(np.real(np.trace(cond @ bob.coarse[n]))), (m, n))
    return JointDistribution(probs)


def joint_expectation(rho, alice, bob, rule):
    """Correlation sum_{m,n} m n P(m, n)."""
    return joint_distribution(rho, alice, bob, rule).expectation()


def cross_term(rho, alice, bob_obs):
    """Coherence between Alice's paired fine projectors, seen through Bob's observable.

    Equals the Lueders correlation minus the von Neumann correlation.
    """
    r = validate_density(rho)
    b = np.asarray(bob_obs, dtype=complex)
    total = 0.0
    for m in OUTCOMES:
        p1, p2 = alice.fine[m]
        total += m * np.trace((p1 @ r @ p2 + p2 @ r @ p1) @ b)
    return float(np.real(total))


def alice_marginal(dist):
    return {m: sum(dist.probs[(m, n)] for n in OUTCOMES) for m in OUTCOMES}


def bob_marginal(dist):
    return {n: sum(dist.probs[(m, n)] for m in OUTCOMES) for n in OUTCOMES}


def commutes_coarsely(alice, bob, tol=TOL):
    """True if every Alice coarse projector commutes with every Bob one."""
    return all(
        max_abs(alice.coarse[m] @ bob.coarse[n] - bob.coarse[n] @ alice.coarse[m]) <= tol
        for m, n in itertools.product(OUTCOMES, OUTCOMES))
