"""
Distance, certainty, score and uncertainty
==========================================

A walk through the pointwise measures on a handful of triplets.
"""

# %%
from neutrosophic import (
    NeutrosophicTriplet,
    certainty,
    complement,
    distance,
    score,
    similarity,
    to_secondary,
    uncertainty,
)

x = NeutrosophicTriplet(0.7, 0.2, 0.1)
print(x, to_secondary(x))

# %% [markdown]
# The distance divides the L1 gap by the longer detour through the
# contradiction corner (1,0,1) or the incompleteness corner (0,0,0).

# %%
for a, b in [((1, 0, 0), (0, 0, 1)), ((1, 1, 0), (0, 1, 1)), ((0.7, 0.2, 0.1), (0.6, 0.3, 0.2))]:
    p, q = NeutrosophicTriplet(*a), NeutrosophicTriplet(*b)
    print(a, b, "D =", round(distance(p, q), 6), "S =", round(similarity(p, q), 6))

# %% [markdown]
# Certainty is the distance between a triplet and its complement.

# %%
print(certainty(x), distance(x, complement(x)))

# %%
chain = [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1), (0, 1, 0), (0, 0, 0), (0, 1, 1), (0, 0, 1)]
for c in chain:
    t = NeutrosophicTriplet(*c)
    print(c, f"score={score(t):+.2f}", f"uncertainty={uncertainty(t):.2f}")
