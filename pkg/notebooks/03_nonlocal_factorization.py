# %% [markdown]
# # Where the extra correlation comes from
#
# A1 = sigma_x (x) I has +1 eigenvectors |+>|1> and |+>|0>. Rotating the
# fine basis inside that eigenspace therefore rotates only Bob's qubit:
# A'1 = A_{1+} (x) C(eta), a projector acting on Bob's side.

# %%
import numpy as np

from seqbell import ContextBasisParams, maximally_entangled, signaling_metric, verify_factorization

np.set_printoptions(precision=4, suppress=True)
for eta in (1.0, 0.98, 0.5, 0.0):
    r = verify_factorization(eta, gamma1=eta)
    print(f"eta={eta:.2f}  residuals {r.residual_first:.1e} {r.residual_second:.1e}  "
          f"Bob-side nontrivial: {r.bob_side_nontrivial}")
    print(np.real(r.c_plus))

# %% [markdown]
# Consequence: Bob's local statistics depend on which basis Alice uses,
# even though she measures the same observable.

# %%
me = maximally_entangled()
p1, p2 = ContextBasisParams(1, 1), ContextBasisParams(2 ** -0.5, 1)
for rule in ("lueders", "von-neumann"):
    print(rule, signaling_metric(me, "A1", "B1", p1, p2, rule))
