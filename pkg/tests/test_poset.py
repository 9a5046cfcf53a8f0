from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from priestley._bits import members, submasks
from priestley.corpus import posets_up_to_iso, v_poset
from priestley.errors import BoundExceeded, CycleDetected, IndexOutOfRange
from priestley.poset import (
    FinPoset,
    antichain,
    build_poset,
    chain,
    closure,
    enumerate_downsets,
    enumerate_upsets,
    extremes,
    is_upset,
)


def brute_upsets(P):
    return [s for s in range(1 << P.n)
            if all(not (s >> i & 1) or all(s >> j & 1 for j in range(P.n) if P.le(i, j)) for i in range(P.n))]


@st.composite
def random_posets(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_poset(n, picked)


def test_singleton_and_chain():
    P = build_poset(1, [])
    assert P.n == 1 and P.le(0, 0)
    C = build_poset(2, [(0, 1)])
    assert C.le(0, 1) and not C.le(1, 0)


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        build_poset(3, [(0, 1), (1, 2), (2, 0)])


def test_bad_index():
    with pytest.raises(IndexOutOfRange):
        build_poset(2, [(0, 2)])
    with pytest.raises(IndexOutOfRange):
        closure(chain(2), 0b100, "up")


def test_closure_examples():
    assert closure(chain(2), 0b1, "up") == 0b11
    assert closure(v_poset(), 0b010, "down") == 0b011
    for P in (chain(3), antichain(2), v_poset()):
        assert closure(P, 0, "up") == 0 == closure(P, 0, "down")


def test_extremes_examples():
    assert extremes(chain(2), 0b11, "min") == 0b01
    assert extremes(antichain(2), 0b11, "min") == 0b11
    A = antichain(2)
    assert closure(A, extremes(A, 0b11, "min"), "up") == 0b11


def test_enumerate_upsets_examples():
    assert enumerate_upsets(build_poset(1, [])) == [0, 1]
    assert enumerate_upsets(chain(2)) == [0, 0b10, 0b11]
    assert enumerate_upsets(antichain(2)) == [0, 1, 2, 3]


def test_upset_bound():
    with pytest.raises(BoundExceeded):
        enumerate_upsets(antichain(5), bound=4)


def test_covers_are_transitive_reduction():
    P = build_poset(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert P.covers() == [(0, 1), (1, 2), (2, 3)]


def test_invalid_order_rejected():
    with pytest.raises(ValueError):
        FinPoset(np.array([[True, True], [True, True]]))


def test_poset_counts_up_to_iso():
    assert [len(posets_up_to_iso(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


@given(random_posets())
@settings(max_examples=60, deadline=None)
def test_upsets_match_brute_force(P):
    ups = enumerate_upsets(P)
    assert ups == brute_upsets(P)
    assert all(is_upset(P, u) for u in ups)
    assert enumerate_downsets(P) == sorted(P.full & ~u for u in ups)


@given(random_posets())
@settings(max_examples=60, deadline=None)
def test_closure_is_a_closure_operator(P):
    for s in range(1 << P.n):
        up = closure(P, s, "up")
        assert s & ~up == 0
        assert closure(P, up, "up") == up
        for t in submasks(s):
            assert closure(P, t, "up") & ~up == 0


@given(random_posets())
@settings(max_examples=40, deadline=None)
def test_extremes_generate_upsets(P):
    for u in enumerate_upsets(P):
        m = extremes(P, u, "min")
        assert closure(P, m, "up") == u
        assert all(not P.le(i, j) or i == j for i, j in product(members(m), repeat=2))


@given(random_posets())
@settings(max_examples=40, deadline=None)
def test_dual_reverses(P):
    D = P.dual()
    assert all(D.le(i, j) == P.le(j, i) for i in range(P.n) for j in range(P.n))
