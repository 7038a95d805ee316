"""Sequential two-qubit CHSH correlations under the Lueders and von Neumann rules."""

from .errors import (
    DegenerateState, InvalidDensity, InvalidDistribution, ParamOutOfRange, SeqBellError,
)
from .states import (
    SharedState, StateAngles, StateKind, density, make_entangled, make_product, make_state,
    maximally_entangled, one_plus_product,
)
from .observables import (
    PARAM_NAMES, BasisParams, ContextBasisParams, ProjectorFamily, bob_family,
    canonical_family, chsh_observables, rotated_family,
)
from .measurement import (
    JointDistribution, UpdateRule, alice_marginal, bob_marginal, cross_term,
    joint_distribution, joint_expectation, lueders_update, von_neumann_update,
)
from .chsh import (
    TSIRELSON, ChshResult, OptimizeSpec, SweepSpec, chsh_value, entangled_vn_closed_form,
    optimize, product_lueders_closed_form, product_vn_closed_form, signaling_metric, sweep,
    sweep_max,
)
from .nonlocality import FactorizationReport, c_plus, verify_factorization

__version__ = "0.1.0"
