# %% [markdown]
# # CHSH values along gamma1
#
# With the Lueders rule the CHSH value is blind to Alice's basis choice.
# With the von Neumann rule, picking a different fine basis for each
# correlation pushes the entangled state past 2 sqrt 2 and a product state
# past the local bound 2.

# %%
import numpy as np

from seqbell import SweepSpec, chsh_value, maximally_entangled, one_plus_product, sweep, sweep_max
from seqbell.presets import FIG1, FIG2

me, pp = maximally_entangled(), one_plus_product()
print("Lueders, entangled:", chsh_value(me, "lueders").delta)
print("Lueders, product:  ", chsh_value(pp, "lueders").delta)

# %%
for name, state, preset in (("entangled", me, FIG1), ("product", pp, FIG2)):
    rows = sweep(state, "von-neumann", SweepSpec("gamma1", 0, 1, 1001, preset.params))
    x, d = sweep_max(rows)
    print(f"{name}: max delta {d:.4f} at gamma1 = {x:.3f}")
    for g, v in rows[::100]:
        print(f"   gamma1={g:.1f}  delta={v:.4f}")

# %% [markdown]
# The curves can be written out as ``param,delta`` CSV with
# ``seqbell sweep --preset fig1 --out fig1.csv`` for plotting elsewhere.
