import math

import numpy as np
import pytest
from hypothesis import given, settings

from seqbell.chsh import (
    TSIRELSON, ChshResult, OptimizeSpec, SweepSpec, _FastObjective, chsh_value,
    closed_form_deviation, entangled_vn_closed_form, lueders_direct, optimize,
    product_lueders_closed_form, product_vn_closed_form, signaling_metric, sweep, sweep_max,
)
from seqbell.errors import DegenerateState
from seqbell.measurement import UpdateRule
from seqbell.observables import BasisParams, ContextBasisParams
from seqbell.presets import FIG1, FIG2
from seqbell.states import StateAngles, make_entangled, make_product, maximally_entangled, one_plus_product

import oracle
from conftest import angle, basis_params, random_params

L, V = UpdateRule.LUEDERS, UpdateRule.VON_NEUMANN
ME = maximally_entangled()
PP = one_plus_product()
ALL_ONE = BasisParams()

# Frozen from tests/oracle.py: p1 = (1, 1) vs p2 = (1/sqrt2, 1), A1/B1.
SIGNALING_ME_A1_B1 = 0.17677669529663692


def test_tsirelson_and_product_lueders():
    assert abs(chsh_value(ME, L).delta - TSIRELSON) < 1e-9
    assert abs(chsh_value(PP, L).delta - math.sqrt(2)) < 1e-9


def test_delta_is_signed_sum_of_correlations(rng):
    for _ in range(20):
        r = chsh_value(ME, V, random_params(rng))
        c = r.correlations
        assert r.delta == c[0] + c[1] + c[2] - c[3]
        assert r.correlation("A2", "B2") == c[3]


def test_chsh_result_rejects_impossible_delta():
    with pytest.raises(ArithmeticError):
        ChshResult((1, 1, 1, -1.1), 4.1, L, ALL_ONE, ME)


def test_matches_oracle(rng):
    for _ in range(50):
        p = random_params(rng)
        a, b = rng.uniform(-3, 3, size=2)
        st = make_entangled(StateAngles(a, b))
        psi = oracle.entangled(a, b)
        assert abs(chsh_value(st, V, p).delta - oracle.chsh(psi, p.as_tuple(), "vn")) < 1e-12
        assert abs(chsh_value(st, L, p).delta - oracle.chsh(psi, p.as_tuple(), "lueders")) < 1e-12


def test_lueders_direct_path(rng):
    for _ in range(20):
        st = make_entangled(StateAngles(*rng.uniform(-3, 3, size=2)))
        assert abs(chsh_value(st, L, random_params(rng)).delta - lueders_direct(st)) < 1e-12


def test_product_lueders_closed_form_examples():
    assert abs(product_lueders_closed_form(StateAngles(0, math.pi / 4)) - math.sqrt(2)) < 1e-12
    assert abs(product_lueders_closed_form(StateAngles(math.pi / 4, math.pi / 4))) < 1e-15
    with pytest.raises(DegenerateState):
        product_lueders_closed_form(StateAngles(0, math.pi / 2))


def test_product_lueders_closed_form_grid():
    for a in np.linspace(0, math.pi, 21):
        for b in np.linspace(-1.4, 1.4, 21):
            angles = StateAngles(float(a), float(b))
            st = make_product(angles)
            assert abs(product_lueders_closed_form(angles) - chsh_value(st, L).delta) < 1e-10


def test_entangled_closed_form_agrees_with_oracle(rng):
    samples = [random_params(rng) for _ in range(300)]
    assert closed_form_deviation(entangled_vn_closed_form, ME, samples) < 1e-12
    # canonical point: both transcriptions coincide (eta2' = 1)
    assert abs(entangled_vn_closed_form(ALL_ONE) - chsh_value(ME, V, ALL_ONE).delta) < 1e-10
    assert abs(entangled_vn_closed_form(ALL_ONE, as_printed=True)
               - chsh_value(ME, V, ALL_ONE).delta) < 1e-10


def test_printed_entangled_closed_form_deviates():
    # the squared eta2' prefactor is a misprint: the curve peaks well below 3.41
    fixed = FIG1.params
    worst = max(abs(entangled_vn_closed_form(fixed.replace("gamma1", g), as_printed=True)
                    - entangled_vn_closed_form(fixed.replace("gamma1", g)))
                for g in np.linspace(0, 1, 11))
    assert worst > 0.1


def test_product_vn_closed_form_agrees_with_oracle(rng):
    samples = [random_params(rng) for _ in range(300)]
    assert closed_form_deviation(product_vn_closed_form, PP, samples) < 1e-12


def test_fig1_closed_form_curve_matches_sweep():
    rows = sweep(ME, V, SweepSpec("gamma1", 0, 1, 101, FIG1.params))
    for g, d in rows:
        assert abs(entangled_vn_closed_form(FIG1.params.replace("gamma1", g)) - d) < 1e-12


def test_sweep_shape_and_order():
    spec = SweepSpec("eta2", 0.2, 0.6, 5, FIG1.params)
    rows = sweep(ME, V, spec)
    assert [x for x, _ in rows] == pytest.approx([0.2, 0.3, 0.4, 0.5, 0.6])
    assert rows == sweep(ME, V, spec)


def test_fig_sweeps():
    _, d1 = sweep_max(sweep(ME, V, SweepSpec("gamma1", 0, 1, 1001, FIG1.params)))
    _, d2 = sweep_max(sweep(PP, V, SweepSpec("gamma1", 0, 1, 1001, FIG2.params)))
    assert abs(d1 - 3.41) <= 0.02
    assert abs(d2 - 2.63) <= 0.02


@pytest.mark.parametrize("name", ["eta1", "gamma1p", "eta2p"])
def test_lueders_sweep_constant(name):
    ds = [d for _, d in sweep(PP, L, SweepSpec(name, 0, 1, 21, FIG2.params))]
    assert max(ds) - min(ds) < 1e-12


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec("delta")
    with pytest.raises(ValueError):
        SweepSpec("eta1", 0.5, 0.4)
    with pytest.raises(ValueError):
        SweepSpec("eta1", steps=1)


@settings(max_examples=100, deadline=None)
@given(basis_params)
def test_delta_bounded(p):
    for st in (ME, PP):
        assert abs(chsh_value(st, V, p).delta) <= 4 + 1e-9


@settings(max_examples=50, deadline=None)
@given(angle, angle, basis_params)
def test_lueders_local_bound_product(a, b, p):
    if math.sin(a) ** 2 + math.cos(b) ** 2 < 1e-6:
        return
    assert chsh_value(make_product(StateAngles(a, b)), L, p).delta <= 2 + 1e-9


def test_fast_objective_matches_chsh_value(rng):
    for st in (ME, PP):
        f = _FastObjective(st, V)
        for _ in range(30):
            x = rng.uniform(size=8)
            assert abs(f(x) - chsh_value(st, V, BasisParams.from_sequence(x)).delta) < 1e-12


def test_optimize_deterministic_and_bounded():
    spec = OptimizeSpec(restarts=4, seed=7, refine_iters=50)
    p1, d1 = optimize(ME, V, spec)
    p2, d2 = optimize(ME, V, spec)
    assert p1 == p2 and d1 == d2
    assert d1 <= 4 + 1e-9


def test_optimize_lueders_is_tsirelson():
    _, d = optimize(ME, L, OptimizeSpec(restarts=2, refine_iters=10))
    assert abs(d - TSIRELSON) < 1e-9


def test_optimize_spec_validation():
    with pytest.raises(ValueError):
        OptimizeSpec(restarts=0)
    with pytest.raises(ValueError):
        OptimizeSpec(grid_resolution=1)
    with pytest.raises(ValueError):
        OptimizeSpec(seed=-1)


def test_signaling_lueders_zero(rng):
    for _ in range(30):
        p1 = ContextBasisParams(*rng.uniform(size=2))
        p2 = ContextBasisParams(*rng.uniform(size=2))
        for a in ("A1", "A2"):
            for b in ("B1", "B2"):
                assert signaling_metric(ME, a, b, p1, p2, L) < 1e-12


def test_signaling_von_neumann_regression():
    p1, p2 = ContextBasisParams(1, 1), ContextBasisParams(1 / math.sqrt(2), 1)
    v = signaling_metric(ME, "A1", "B1", p1, p2, V)
    assert abs(v - SIGNALING_ME_A1_B1) < 1e-12
    psi = oracle.entangled(math.pi / 4, math.pi / 4)
    ref = abs(oracle.vn_bob_marginal(psi, "A1", "B1", 1, 1)
              - oracle.vn_bob_marginal(psi, "A1", "B1", 1 / math.sqrt(2), 1))
    assert abs(v - ref) < 1e-12


def test_signaling_zero_for_relabelled_basis():
    # eta = gamma = 0 only swaps the two canonical fine kets
    v = signaling_metric(ME, "A1", "B1", ContextBasisParams(1, 1), ContextBasisParams(0, 0), V)
    assert v < 1e-12


def test_signaling_zero_on_pinching_fixed_point():
    # |1>|+> is diagonal in A2's fine basis for eta=gamma=1 and is unaffected
    # by A2 fine rotations in the +1 space, where it has no weight
    v = signaling_metric(PP, "A2", "B1", ContextBasisParams(1, 1), ContextBasisParams(0.3, 1), V)
    assert v < 1e-12
