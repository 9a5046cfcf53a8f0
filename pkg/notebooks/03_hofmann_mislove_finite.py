"""
Hofmann-Mislove on finite spaces
================================

For a sober finite space, Scott-open filters of the frame of opens match
the compact saturated subsets. Every finite T0 space is sober.
"""

# %%
from priestley import alexandrov, build_poset, build_space, hofmann_mislove, is_sober, points_homeomorphism

# Sierpinski space: points 0, 1 with opens {}, {1}, {0, 1}.
S = build_space(2, [[], [1], [0, 1]])
print("sober:", is_sober(S))
print(hofmann_mislove(S).as_dict())

# %%
# The Alexandrov topology of the V poset.
V = alexandrov(build_poset(3, [(0, 1), (0, 2)]))
H = hofmann_mislove(V)
print(len(H), "Scott-open filters")
print("x -> point of O(X):", points_homeomorphism(V))

# %%
# The indiscrete space on two points is not T0 and fails sobriety.
I = build_space(2, [[], [0, 1]])
print("sober:", is_sober(I))
