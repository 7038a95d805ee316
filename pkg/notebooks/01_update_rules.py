# %% [markdown]
# # Lueders vs von Neumann updates on a degenerate observable
#
# Alice's observable A2 = sigma_z (x) I has two eigenvalues, each twice
# degenerate. The Lueders rule projects onto each eigenspace; the von
# Neumann rule projects onto each vector of a chosen basis inside it.

# %%
import numpy as np

from seqbell import (
    ContextBasisParams, UpdateRule, bob_family, canonical_family, cross_term,
    joint_distribution, lueders_update, maximally_entangled, rotated_family,
    von_neumann_update,
)
from seqbell.linalg import purity

np.set_printoptions(precision=3, suppress=True)
rho = maximally_entangled().rho
fam = canonical_family("A2")

# %% [markdown]
# The von Neumann update is a finer pinching, so it never increases purity.

# %%
rl = lueders_update(rho, fam)
rv = von_neumann_update(rho, fam)
print("purity initial / Lueders / von Neumann:", purity(rho), purity(rl), purity(rv))
print(np.real(rv))

# %% [markdown]
# Sequential joint statistics: Alice measures A2, then Bob measures B1.

# %%
bob = bob_family("B1")
for rule in UpdateRule:
    d = joint_distribution(rho, fam, bob, rule)
    print(f"{rule.value:12s}", {k: round(v, 6) for k, v in d.probs.items()},
          "E =", round(d.expectation(), 6))

# %% [markdown]
# The gap between the two correlations is exactly the coherence between
# Alice's paired fine projectors, read out through Bob's observable.

# %%
for eta in (1.0, 0.8, 0.5, 0.2):
    f = rotated_family("A2", ContextBasisParams(eta, eta))
    lu = joint_distribution(rho, f, bob, "lueders").expectation()
    vn = joint_distribution(rho, f, bob, "von-neumann").expectation()
    print(f"eta=gamma={eta:.1f}  Lueders {lu:+.6f}  von Neumann {vn:+.6f}  "
          f"cross term {cross_term(rho, f, bob.observable):+.6f}")
