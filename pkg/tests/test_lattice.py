from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from priestley._bits import members
from priestley.corpus import boolean_lattice, chain_lattice, diamond, m3, n5, posets_up_to_iso, v_poset
from priestley.errors import BoundExceeded, NotALattice, NotDistributive
from priestley.lattice import (
    Filter,
    build_lattice,
    check_distributive,
    downset_lattice,
    enumerate_filters,
    filter_generated,
    ideal_lattice,
    improper_filter,
    is_compact_element,
    is_completely_prime_finite,
    is_distributive,
    is_prime,
    is_scott_open_finite,
    principal_filter,
    require_distributive,
    scott_counterexample,
)
from priestley.poset import antichain, build_poset, chain

from conftest import corpus


def brute_filters(L):
    out = []
    for s in range(1, 1 << L.n):
        el = members(s)
        if all(s >> b & 1 for a in el for b in range(L.n) if L.le(a, b)) and \
                all(s >> L.meet(a, b) & 1 for a in el for b in el):
            out.append(s)
    return out


def brute_completely_prime(L, F):
    """Every subset S of L: ⋁S ∈ F implies S meets F (⋁∅ is the bottom)."""
    if F.members == (1 << L.n) - 1:
        return False
    for s in range(1 << L.n):
        if L.join_all(members(s)) in F and not s & F.members:
            return False
    return True


def lab(L, *names):
    return sum(1 << L.index(x) for x in names)


def test_build_examples():
    C = build_lattice(chain(2))
    assert (C.bottom, C.top) == (0, 1)
    with pytest.raises(NotALattice):
        build_lattice(v_poset())
    D = diamond()
    a, b = D.index("a"), D.index("b")
    assert D.labels[D.meet(a, b)] == "0" and D.labels[D.join(a, b)] == "1"


def test_meet_join_are_glb_lub(lattices):
    for _, L in lattices[::7]:
        for a, b in product(range(L.n), repeat=2):
            lower = [c for c in range(L.n) if L.le(c, a) and L.le(c, b)]
            upper = [c for c in range(L.n) if L.le(a, c) and L.le(b, c)]
            assert L.meet(a, b) in lower and all(L.le(c, L.meet(a, b)) for c in lower)
            assert L.join(a, b) in upper and all(L.le(L.join(a, b), c) for c in upper)


def test_distributivity_examples():
    assert check_distributive(diamond()) is None
    assert check_distributive(m3()) is not None
    assert check_distributive(n5()) is not None
    assert all(is_distributive(chain_lattice(k)) for k in range(1, 9))
    with pytest.raises(NotDistributive):
        require_distributive(m3())


def test_distributive_matches_triple_scan():
    for n in range(1, 6):
        for P in posets_up_to_iso(n):
            try:
                L = build_lattice(P)
            except NotALattice:
                continue
            brute = all(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
                        for a, b, c in product(range(L.n), repeat=3))
            assert is_distributive(L) == brute
            bad = check_distributive(L)
            if bad:
                a, b, c = bad
                assert L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))


def test_downset_lattice_examples():
    assert downset_lattice(build_poset(1, [])).n == 2
    B = downset_lattice(antichain(2))
    assert B.n == 4 and is_distributive(B)
    assert downset_lattice(chain(2)).n == 3


def test_filter_generated_examples():
    D = diamond()
    assert filter_generated(D, lab(D, "a")).members == lab(D, "a", "1")
    assert filter_generated(D, lab(D, "a", "b")).members == D.poset.full
    assert filter_generated(D, 0).members == lab(D, "1")


def test_filter_counts():
    assert len(enumerate_filters(chain_lattice(2))) == 2
    assert [F.members for F in enumerate_filters(diamond())] == sorted(
        [lab(diamond(), "1"), lab(diamond(), "a", "1"), lab(diamond(), "b", "1"), 0b1111])
    assert len(enumerate_filters(chain_lattice(3))) == 3


def test_filters_match_brute_force(lattices):
    for _, L in lattices:
        if L.n <= 10:
            assert [F.members for F in enumerate_filters(L)] == brute_filters(L)


def test_filter_validation():
    D = diamond()
    with pytest.raises(ValueError):
        Filter(D, lab(D, "a", "b", "1"))
    with pytest.raises(ValueError):
        Filter(D, 0)


def test_prime_examples():
    D = diamond()
    assert is_prime(D, Filter(D, lab(D, "a", "1")))
    assert not is_prime(D, Filter(D, lab(D, "1")))
    C = chain_lattice(2)
    assert is_prime(C, principal_filter(C, C.top))


def test_completely_prime_examples():
    D = diamond()
    assert is_completely_prime_finite(D, Filter(D, lab(D, "a", "1")))
    assert not is_completely_prime_finite(D, improper_filter(D))
    C = chain_lattice(2)
    assert is_completely_prime_finite(C, principal_filter(C, C.top))


def test_completely_prime_matches_brute_force(lattices):
    for _, L in lattices:
        if L.n > 9:
            continue
        for F in enumerate_filters(L):
            want = brute_completely_prime(L, F)
            assert is_completely_prime_finite(L, F, "all") == want
            assert is_completely_prime_finite(L, F, "downsets") == want
            # in a finite lattice the completely prime filters are the proper prime ones
            assert want == (F.proper and is_prime(L, F))


def test_scott_open_examples():
    D = diamond()
    assert is_scott_open_finite(D, Filter(D, lab(D, "1")))
    C = chain_lattice(3)
    assert all(is_scott_open_finite(C, F) for F in enumerate_filters(C))
    assert is_scott_open_finite(D, improper_filter(D))
    assert scott_counterexample(D, Filter(D, lab(D, "1"))) is None


def test_scott_modes_agree(lattices):
    for _, L in lattices:
        if L.n > 8:
            continue
        for F in enumerate_filters(L):
            assert is_scott_open_finite(L, F, "all") == is_scott_open_finite(L, F, "downsets") is True


def test_scott_bound():
    L = boolean_lattice(4)
    with pytest.raises(BoundExceeded):
        is_scott_open_finite(L, improper_filter(L), "all")
    assert is_scott_open_finite(L, improper_filter(L), "auto")


def test_compact_elements():
    D = diamond()
    assert all(is_compact_element(D, a) for a in range(D.n))
    C = chain_lattice(2)
    assert is_compact_element(C, C.top)
    with pytest.raises(BoundExceeded):
        is_compact_element(boolean_lattice(4), 0, "all")


def test_ideal_lattice_examples():
    for L in (chain_lattice(2), diamond(), chain_lattice(3)):
        idl, iso = ideal_lattice(L)
        assert idl.n == L.n
        for a in range(L.n):
            assert idl.sets[iso[a]] == L.down(a)


@given(st.integers(0, len(corpus()) - 1), st.data())
@settings(max_examples=60, deadline=None)
def test_filter_is_upset_and_meet_closed(i, data):
    _, L = corpus()[i]
    Fs = enumerate_filters(L)
    F = Fs[data.draw(st.integers(0, len(Fs) - 1))]
    el = F.elements()
    assert L.top in F
    assert all(L.meet(a, b) in F for a in el for b in el)
    assert all(b in F for a in el for b in range(L.n) if L.le(a, b))
    # finite lattices: every filter is principal
    assert F == principal_filter(L, L.meet_all(el))
