"""
Priestley round trip on small distributive lattices
===================================================

A finite distributive lattice is recovered from its prime filters: the
dual space carries the inclusion order, and the clopen upsets of that
space form a lattice isomorphic to the original one.
"""

# %%
from priestley import dual_space, reconstruct, structural_validators
from priestley.corpus import boolean_lattice, chain_lattice, diamond, m3

# %%
# The diamond 1 + 2 + 1 has two join-irreducibles, hence two points.
L = diamond()
X = dual_space(L)
print(X)
print("points:", X.order.labels)
print("covers:", X.order.covers())

# %%
# sigma(a) is the set of prime filters containing a.
for a in range(L.n):
    print(L.labels[a], "->", bin(X.sigma[a]))

# %%
# Rebuild the lattice as the clopen upsets and check sigma is an isomorphism.
R = reconstruct(X)
print(R.as_dict())

# %%
# Chains and Boolean lattices behave the same way.
for name, K in [("chain 5", chain_lattice(5)), ("2^3", boolean_lattice(3))]:
    Y = dual_space(K)
    print(name, "points", Y.n, "rebuilt size", reconstruct(Y).lattice.n)

# %%
# Structural validators on the dual of the diamond.
print(structural_validators(X))

# %%
# M3 is not distributive, so it has no dual space.
try:
    dual_space(m3())
except Exception as e:
    print(type(e).__name__, e)
