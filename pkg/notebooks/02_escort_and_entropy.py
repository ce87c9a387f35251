"""
Escort pair and Shannon entropy
===============================

The escort pair turns a triplet into a complementary fuzzy pair with the same
score; the entropy of the triplet is the fuzzy entropy of its escort.
"""

# %%
import numpy as np

from neutrosophic import (
    BifuzzyPair,
    NeutrosophicTriplet,
    PairKind,
    escort,
    neutrosophic_entropy,
    pair_entropy,
    uncertainty,
)

x = NeutrosophicTriplet(0.7, 0.2, 0.1)
print(escort(x), neutrosophic_entropy(x))

# %% [markdown]
# Entropy and uncertainty share their extremes and monotonicity but are
# different functions. Along a slice with fixed omega and delta:

# %%
omega, delta = 0.2, -0.2
for tau in np.linspace(0.0, 0.8, 9):
    t = NeutrosophicTriplet((1 + delta + tau) / 2, omega, (1 + delta - tau) / 2)
    print(f"tau={tau:.1f}  entropy={neutrosophic_entropy(t).normalized:.4f}  uncertainty={uncertainty(t):.4f}")

# %% [markdown]
# Bifuzzy pairs use the reduced formulas of their kind.

# %%
for p in (BifuzzyPair(0.6, 0.2, PairKind.INTUITIONISTIC), BifuzzyPair(0.9, 0.4, PairKind.PARACONSISTENT)):
    print(p, pair_entropy(p))
