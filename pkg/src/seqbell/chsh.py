"""
CHSH value assembly, closed forms, parameter sweeps and maximization.

The CHSH combination is

    delta = <A1 B1> + <A1 B2> + <A2 B1> - <A2 B2>

where each correlation is measured sequentially (Alice, then Bob) and,
under the von Neumann rule, Alice may pick a different fine basis for each
of the four correlations.
"""

from dataclasses import dataclass, field
import logging
import math

import numpy as np

from .measurement import UpdateRule, joint_expectation, joint_distribution, bob_marginal
from .observables import (
    CONTEXTS, PARAM_NAMES, AliceSetting, BasisParams, BobSetting, ContextBasisParams,
    bob_family, canonical_kets, chsh_observables, rotated_family,
)
from .errors import DegenerateState
from .linalg import TOL
from .states import SharedState

log = logging.getLogger(__name__)

ALGEBRAIC_MAX = 4.0
LOCAL_BOUND = 2.0
TSIRELSON = 2.0 * math.sqrt(2.0)
SIGNS = (1, 1, 1, -1)


@dataclass(frozen=True, eq=False)
class ChshResult:
    correlations: tuple
    delta: float
    rule: UpdateRule
    params: BasisParams
    state: SharedState

    def __post_init__(self):
        if abs(self.delta) > ALGEBRAIC_MAX + 1e-9:
            raise ArithmeticError(f"CHSH value {self.delta!r} exceeds the algebraic maximum")

    def correlation(self, alice, bob):
        return self.correlations[CONTEXTS.index((AliceSetting(alice).value, BobSetting(bob).value))]


def combine(correlations):
    c1, c2, c3, c4 = correlations
    return c1 + c2 + c3 - c4


def chsh_value(state, rule, params=None):
    """Evaluate the four sequential correlations and their CHSH combination.

    Parameters
    ----------
    state : SharedState
    rule : UpdateRule or str
    params : BasisParams, optional
        Alice's fine basis per context. Irrelevant for the Lueders rule;
        defaults to the canonical bases.
    """
    rule = UpdateRule(rule)
    params = BasisParams() if params is None else params
    rho = state.rho
    corr = []
    for alice, bob in CONTEXTS:
        fam = rotated_family(alice, params.context(alice, bob))
        corr.append(joint_expectation(rho, fam, bob_family(bob), rule))
    corr = tuple(corr)
    return ChshResult(corr, combine(corr), rule, params, state)


def lueders_direct(state):
    """Tr[rho (A (x) B)] combination, bypassing every projector."""
    a1, a2, b1, b2 = chsh_observables()
    rho = state.rho
    t = lambda a, b: float(np.real(np.trace(rho @ a @ b)))
    return t(a1, b1) + t(a1, b2) + t(a2, b1) - t(a2, b2)


# -- closed forms ------------------------------------------------------------

def product_lueders_closed_form(angles):
    """Lueders CHSH value on the product family of states, in closed form."""
    a, b = angles.alpha, angles.beta
    den = math.sin(a) ** 2 + math.cos(b) ** 2
    if den < TOL:
        raise DegenerateState(f"product state is null for alpha={a!r}, beta={b!r}")
    return (math.cos(2 * a) + math.cos(2 * b)) / (math.sqrt(2) * den)


def _r(x):
    return math.sqrt(max(0.0, 1.0 - x * x))


def entangled_vn_closed_form(params, as_printed=False):
    """Von Neumann CHSH value on the maximally entangled state, in closed form.

    The published expression carries a squared prefactor on the eta2' term;
    ``as_printed=True`` keeps it, the default uses a single power, which is
    the version that agrees with the projector computation.
    """
    e1, g1, e1p, g1p, e2, g2, e2p, g2p = params.as_tuple()
    pref = e2p ** 2 if as_printed else e2p
    s = (
        2
        + g1 * (2 * g1 * (g1 * (_r(g1) + g1) - 1) - _r(g1))
        - g2 * (_r(g2) + 2 * g2 * (g2 ** 2 - g2 * _r(g2) - 1))
        + e1p * (_r(e1p) + 2 * e1p * (e1p ** 2 - e1p * _r(e1p) - 1))
        + pref * (_r(e2p) - 2 * e2p * (e2p * (_r(e2p) + e2p) - 1))
        + e1 * (2 * e1 * (e1 * (_r(e1) + e1) - 1) - _r(e1))
        - e2 * (_r(e2) + 2 * e2 * (e2 ** 2 - _r(e2) * e2 - 1))
        + g1p * (2 * g1p * (g1p * (-_r(g1p) + g1p) - 1) + _r(g1p))
        + g2p * (_r(g2p) - 2 * g2p * (g2p ** 2 + g2p * _r(g2p) - 1))
    )
    return s / math.sqrt(2)


def product_vn_closed_form(params):
    """Von Neumann CHSH value on |1> (x) |+> (alpha = 0, beta = pi/4), in closed form.

    At this operating point the state normalization is 1.
    """
    e1, g1, e1p, g1p, e2, g2, e2p, g2p = params.as_tuple()
    s = (
        2
        - g1 * (_r(g1) + 2 * g1 * (g1 ** 2 - g1 * _r(g1) - 1))
        + (2 * g2 ** 2 - 1) * (2 * g2 * (_r(g2) - g2) + 1)
        + e1p * (_r(e1p) - 2 * e1p * (e1p * (_r(e1p) + e1p) - 1))
        + e1 * (_r(e1) + 2 * e1 * (e1 ** 2 - e1 * _r(e1) - 1))
        + g1p * (2 * g1p * (g1p * (_r(g1p) + g1p) - 1) - _r(g1p))
        - (2 * g2p ** 2 - 1) * (2 * g2p * (_r(g2p) + g2p) - 1)
    )
    return s / math.sqrt(2)


def closed_form_deviation(closed_form, state, samples):
    """Max |closed_form(p) - chsh_value(state, von Neumann, p)| over ``samples``."""
    worst = 0.0
    for p in samples:
        d = abs(closed_form(p) - chsh_value(state, UpdateRule.VON_NEUMANN, p).delta)
        worst = max(worst, d)
    log.info("closed-form deviation over %d samples: max |diff| = %.3e", len(samples), worst)
    return worst


# -- sweeps ------------------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    varied: str
    start: float = 0.0
    stop: float = 1.0
    steps: int = 1001
    fixed: BasisParams = field(default_factory=BasisParams)

    def __post_init__(self):
        if self.varied not in PARAM_NAMES:
            raise ValueError(f"varied must be one of {PARAM_NAMES}, got {self.varied!r}")
        if not (0.0 <= self.start <= self.stop <= 1.0):
            raise ValueError(f"sweep range [{self.start}, {self.stop}] must lie within [0, 1]")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps!r}")

    def values(self):
        v = np.linspace(self.start, self.stop, int(self.steps))
        v[-1] = self.stop
        return [float(x) for x in v]


def sweep(state, rule, spec):
    """Evaluate delta along one basis parameter; rows in ascending order."""
    return [(x, chsh_value(state, rule, spec.fixed.replace(spec.varied, x)).delta)
            for x in spec.values()]


def sweep_max(rows):
    """(argmax, max) of sweep rows; the first maximizer wins ties."""
    best = max(range(len(rows)), key=lambda i: (rows[i][1], -i))
    return rows[best]


# -- maximization ------------------------------------------------------------

@dataclass(frozen=True)
class OptimizeSpec:
    restarts: int = 32
    seed: int = 0
    refine_iters: int = 200
    grid_resolution: int = 9

    def __post_init__(self):
        for name in ("restarts", "refine_iters", "grid_resolution"):
            v = getattr(self, name)
            if int(v) != v or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.grid_resolution < 2:
            raise ValueError("grid_resolution must be at least 2")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError(f"seed must be an unsigned integer, got {self.seed!r}")


class _FastObjective:
    """Vectorless CHSH evaluator for the optimizer.

    Under the von Neumann rule the correlation of one context is
    sum_m m sum_k <v_k|rho|v_k> <v_k|B|v_k> over Alice's fine kets v_k,
    which avoids forming projectors.
    """

    def __init__(self, state, rule):
        self.rule = UpdateRule(rule)
        self.rho = state.rho
        _, _, b1, b2 = chsh_observables()
        self.bob = {"B1": b1, "B2": b2}
        self.kets = {a: canonical_kets(a) for a in ("A1", "A2")}
        if self.rule is UpdateRule.LUEDERS:
            self.constant = chsh_value(state, self.rule).delta

    def _context(self, alice, bob, eta, gamma):
        base = self.kets[alice]
        b = self.bob[bob]
        total = 0.0
        for m, c in ((1, eta), (-1, gamma)):
            f, s_ = base[m]
            s = _r(c)
            for v in (c * f + s * s_, s * f - c * s_):
                pv = np.real(np.vdot(v, self.rho @ v))
                bv = np.real(np.vdot(v, b @ v))
                total += m * pv * bv
        return total

    def __call__(self, x):
        if self.rule is UpdateRule.LUEDERS:
            return self.constant
        return sum(sign * self._context(a, b, x[2 * i], x[2 * i + 1])
                   for i, ((a, b), sign) in enumerate(zip(CONTEXTS, SIGNS)))


def _coordinate_grid_search(f, x, fx, grid, max_passes=20):
    for _ in range(max_passes):
        improved = False
        for i in range(len(x)):
            for g in grid:
                if g == x[i]:
                    continue
                y = x.copy()
                y[i] = g
                fy = f(y)
                if fy > fx + 1e-15:
                    x, fx, improved = y, fy, True
        if not improved:
            break
    return x, fx


def _compass_refine(f, x, fx, step, iters, upper=1.0, min_step=1e-12):
    for _ in range(iters):
        improved = False
        for i in range(len(x)):
            for d in (step, -step):
                y = x.copy()
                y[i] = min(upper, max(0.0, y[i] + d))
                if y[i] == x[i]:
                    continue
                fy = f(y)
                if fy > fx + 1e-15:
                    x, fx, improved = y, fy, True
                    break
        if not improved:
            step *= 0.5
            if step < min_step:
                break
    return x, fx


def optimize(state, rule, spec=None):
    """Maximize delta over Alice's eight basis parameters in [0, 1]^8.

    Every parameter is the cosine of a rotation angle inside an eigenspace,
    so the search runs over the angles theta = arccos(param) in
    [0, pi/2]; a grid uniform in angle resolves the peaks near 1 that a
    grid uniform in the parameter would straddle.

    Each restart draws a seeded uniform start, runs cyclic coordinate
    search over a ``grid_resolution``-point angle grid per axis, then
    refines with a shrinking compass search. Returns ``(BasisParams,
    delta)`` with the delta re-evaluated through :func:`chsh_value`.
    """
    spec = OptimizeSpec() if spec is None else spec
    rule = UpdateRule(rule)
    obj = _FastObjective(state, rule)
    f = lambda theta: obj(np.cos(theta))
    half_pi = math.pi / 2
    rng = np.random.default_rng(spec.seed)
    grid = np.linspace(0.0, half_pi, spec.grid_resolution)
    step = 0.5 * half_pi / (spec.grid_resolution - 1)
    best_t, best_f = None, -np.inf
    for _ in range(spec.restarts):
        t = rng.uniform(0.0, half_pi, size=8)
        ft = f(t)
        t, ft = _coordinate_grid_search(f, t, ft, grid)
        t, ft = _compass_refine(f, t, ft, step, spec.refine_iters, upper=half_pi)
        if ft > best_f:
            best_t, best_f = t, ft
    params = BasisParams.from_sequence(np.clip(np.cos(best_t), 0.0, 1.0))
    delta = chsh_value(state, rule, params).delta
    log.info("optimize(%s, %s): best delta %.12f at %s", state.kind.value, rule.value,
             delta, params.as_tuple())
    return params, min(delta, ALGEBRAIC_MAX + 1e-9)


# -- induced signaling -------------------------------------------------------

def signaling_metric(state, alice_obs, bob_obs, p1, p2, rule):
    """Largest change in Bob's outcome marginal when Alice switches fine basis.

    Alice measures the same observable in both cases; only her choice of
    basis inside its eigenspaces differs (``p1`` vs ``p2``).
    """
    rule = UpdateRule(rule)
    rho = state.rho
    bob = bob_family(bob_obs)
    m1 = bob_marginal(joint_distribution(rho, rotated_family(alice_obs, p1), bob, rule))
    m2 = bob_marginal(joint_distribution(rho, rotated_family(alice_obs, p2), bob, rule))
    return max(abs(m1[n] - m2[n]) for n in m1)
