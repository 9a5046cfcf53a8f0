"""
Infinite fixtures, symbolically
===============================

Two infinite distributive frames: the chain omega + 1 and the cofinite
topology on the naturals. Elements, families and filters are small
descriptors; joins of infinite families use closed forms.
"""

# %%
from priestley import symbolic as sym

C = sym.CHAIN_FRAME
Q = sym.COFINITE_FRAME

# %%
# Top of the chain is the join of nat(0) but no finite part reaches it.
print(sym.family_join(C, C.top_witness))
print("frame compact:", sym.frame_compact(C))

# %%
# The cofinite frame is compact, so the improper-style filter of
# nonzero opens is Scott-open and maps to the generic point alone.
print("frame compact:", sym.frame_compact(Q))
print(sym.hm_map(Q, sym.AllNonzero()))

# %%
# A filter of opens containing 3 and 7 corresponds to the points {3, 7}
# together with the generic point.
F = sym.ContainsAll(frozenset({3, 7}))
K = sym.hm_map(Q, F)
print(K)
print(sym.hm_inv(Q, K))
print("completely prime:", bool(sym.is_completely_prime_sym(Q, F)))

# %%
# Points of each frame, up to a bound.
print(sym.points_of(C, bound=5))
print(sym.points_of(Q, bound=5))

# %%
# Descriptors round trip through JSON.
print(sym.to_json(K))
print(sym.from_json(sym.to_json(K)) == K)
