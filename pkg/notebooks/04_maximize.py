# %% [markdown]
# # Searching all eight basis parameters
#
# The optimizer runs a seeded multi-start coordinate search followed by a
# compass refinement over [0, 1]^8.

# %%
from seqbell import OptimizeSpec, maximally_entangled, one_plus_product, optimize

spec = OptimizeSpec(restarts=8, seed=0, refine_iters=200)
for name, state in (("entangled", maximally_entangled()), ("product", one_plus_product())):
    params, delta = optimize(state, "von-neumann", spec)
    print(f"{name}: best delta {delta:.10f}")
    print("   ", {k: round(v, 4) for k, v in params.as_dict().items()})

# %% [markdown]
# The best values found are 2 + sqrt 2 (~3.4142) for the entangled state and
# 2 + 1/sqrt 2 (~2.7071) for the product state. The search does not come
# close to the algebraic maximum 4.
