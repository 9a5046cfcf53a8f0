"""
Filters against closed upsets
=============================

Each filter F of D corresponds to the closed upset of prime filters
containing F; the correspondence reverses inclusion.
"""

# %%
from priestley import closed_upsets, dual_space, enumerate_filters, filter_to_k, filters_vs_closed_upsets
from priestley.corpus import boolean_lattice

L = boolean_lattice(2)
X = dual_space(L)

# %%
for F in enumerate_filters(L):
    K = filter_to_k(X, F)
    print(bin(F.members), "->", bin(K.members))

# %%
print(len(closed_upsets(X)), "closed upsets")
B = filters_vs_closed_upsets(X)
print(B.as_dict())
