import json

import pytest
from hypothesis import given, settings, strategies as st

from priestley.errors import FixtureMismatch, NotScottOpen, UnknownRule
from priestley.symbolic import (
    CHAIN_FRAME as C,
    COFINITE_FRAME as Q,
    AllNonzero,
    AllPoints,
    AllPrimes,
    ChainPoint,
    CofiniteMissing,
    CofinitePlusGeneric,
    CofinitePoints,
    Contains,
    ContainsAll,
    Empty,
    EmptySet,
    FiniteFamily,
    FinitePlusGeneric,
    Generic,
    GenericOnly,
    Improper,
    Missing,
    Nat,
    Points,
    PrefixPoints,
    PrimeTop,
    Principal,
    RuleFamily,
    Top,
    classify_scott_open,
    corollary59_sym,
    cross_check_family,
    elem_join_finite,
    elem_leq,
    elem_meet,
    family_join,
    filter_member,
    frame_compact,
    frame_law_check,
    from_json,
    hm_inv,
    hm_map,
    is_compact_element_sym,
    is_completely_prime_sym,
    points_of,
    prime_pair_witness,
    refute_scott_open,
    to_json,
)

NATSETS = st.frozensets(st.integers(0, 30), max_size=6)
CHAIN_ELEMS = st.one_of(st.builds(Nat, st.integers(0, 40)), st.just(Top()))
COF_ELEMS = st.one_of(st.just(Empty()), st.builds(Missing, NATSETS))


# -- element algebra ------------------------------------------------------------

def test_order_examples():
    assert elem_leq(C, Nat(2), Top())
    assert elem_leq(Q, Missing({1, 2}), Missing({1}))
    assert not elem_leq(Q, Missing({1}), Missing({2}))


def test_meet_join_examples():
    assert elem_meet(Q, Missing({1}), Missing({2})) == Missing({1, 2})
    assert elem_join_finite(C, [Nat(3), Nat(5)]) == Nat(5)
    assert elem_join_finite(C, []) == Nat(0)
    assert elem_join_finite(Q, []) == Empty()
    assert Missing() == CofiniteMissing(frozenset()) == Q.top


@pytest.mark.parametrize("frame,elems", [(C, CHAIN_ELEMS), (Q, COF_ELEMS)])
def test_lattice_laws(frame, elems):
    @given(elems, elems, elems)
    @settings(max_examples=200, deadline=None)
    def check(a, b, c):
        m, j = frame.meet(a, b), frame.join(a, b)
        assert frame.leq(m, a) and frame.leq(m, b) and frame.leq(a, j) and frame.leq(b, j)
        if frame.leq(c, a) and frame.leq(c, b):
            assert frame.leq(c, m)
        if frame.leq(a, c) and frame.leq(b, c):
            assert frame.leq(j, c)
        if frame.leq(a, b) and frame.leq(b, a):
            assert a == b
        if frame.leq(a, b) and frame.leq(b, c):
            assert frame.leq(a, c)
        assert frame.meet(a, frame.join(b, c)) == frame.join(frame.meet(a, b), frame.meet(a, c))

    check()


def test_descriptor_validation():
    with pytest.raises(ValueError):
        Nat(-1)
    with pytest.raises(ValueError):
        Missing({-2})
    with pytest.raises(ValueError):
        ChainPoint(0)
    with pytest.raises(FixtureMismatch):
        elem_leq(C, Nat(1), Missing())
    with pytest.raises(FixtureMismatch):
        filter_member(Q, ContainsAll({1}), Top())


# -- families ---------------------------------------------------------------------

def test_family_join_examples():
    assert family_join(C, RuleFamily("nat", (0,))) == Top()
    assert family_join(C, FiniteFamily((Nat(2), Nat(4)))) == Nat(4)
    assert family_join(Q, RuleFamily("co_singletons")) == Missing()
    with pytest.raises(UnknownRule):
        family_join(C, RuleFamily("co_singletons"))


def test_builtin_families_closed_forms():
    for frame in (C, Q):
        for fam in frame.builtin_families():
            assert cross_check_family(frame, fam, sample=1000)


def test_frame_distributivity():
    for frame in (C, Q):
        for a in frame.sample_elements(7):
            for fam in frame.builtin_families():
                assert frame_law_check(frame, a, fam)


# -- filters ------------------------------------------------------------------------

def test_filter_member_examples():
    assert not filter_member(Q, ContainsAll({3}), Missing({3}))
    assert filter_member(C, Principal(Nat(2)), Top())
    assert not filter_member(Q, AllNonzero(), Empty())
    assert filter_member(Q, Improper(), Empty())


def test_canonical_forms():
    assert C.canonical_filter(Principal(Nat(0))) == Improper()
    assert Q.canonical_filter(Principal(Empty())) == Improper()
    assert Q.canonical_filter(ContainsAll(set())) == AllNonzero()


def test_filters_are_filters():
    for frame in (C, Q):
        for F in frame.sample_filters():
            probe = frame.sample_elements(F)
            inside = [a for a in probe if frame.filter_member(F, a)]
            assert frame.top in inside
            for a in inside:
                assert all(frame.filter_member(F, b) for b in probe if frame.leq(a, b))
                assert all(frame.filter_member(F, frame.meet(a, b)) for b in inside)


def test_filter_inclusion_matches_membership():
    fl = [C.canonical_filter(F) for F in C.sample_filters()]
    for F in fl:
        for G in fl:
            probe = C.sample_elements(F, G)
            assert C.filter_leq(F, G) == all(C.filter_member(G, a) for a in probe if C.filter_member(F, a))
    fl = [Q.canonical_filter(F) for F in Q.sample_filters()] + [Principal(Missing({9})), ContainsAll({9, 11})]
    for F in fl:
        for G in fl:
            probe = Q.sample_elements(F, G)
            assert Q.filter_leq(F, G) == all(Q.filter_member(G, a) for a in probe if Q.filter_member(F, a))


# -- Scott openness and compactness ----------------------------------------------------

def test_refute_examples():
    nat = RuleFamily("nat", (0,))
    assert refute_scott_open(C, Principal(Top()), nat).counterexample
    t = refute_scott_open(C, Principal(Nat(3)), nat)
    assert not t.counterexample and t.first_hit == 3
    for fam in Q.builtin_families():
        assert not refute_scott_open(Q, AllNonzero(), fam).counterexample


def test_classify_examples():
    v = classify_scott_open(C, Principal(Top()))
    assert not v and v.witness == RuleFamily("nat", (0,))
    assert refute_scott_open(C, Principal(Top()), v.witness).counterexample
    assert classify_scott_open(C, Principal(Nat(7)))
    assert classify_scott_open(Q, ContainsAll({0, 5}))
    for F in Q.sample_filters():
        assert classify_scott_open(Q, F)


def test_compactness():
    v = is_compact_element_sym(C, Top())
    assert not v and v.witness is not None
    assert is_compact_element_sym(C, Nat(0))
    assert all(is_compact_element_sym(C, Nat(k)) for k in range(30))
    assert is_compact_element_sym(Q, Missing({4}))
    assert all(is_compact_element_sym(Q, a) for a in Q.sample_elements())
    assert frame_compact(C) is False
    assert frame_compact(Q) is True


# -- points and spectrum ------------------------------------------------------------------

def test_points_examples():
    assert is_completely_prime_sym(Q, AllNonzero())
    assert prime_pair_witness(Q, Principal(Missing())) is not None
    a, b = prime_pair_witness(Q, Principal(Missing()))
    assert Q.join(a, b) == Missing()
    assert all(is_completely_prime_sym(C, Principal(Nat(m))) for m in range(1, 50))
    assert not is_completely_prime_sym(C, Principal(Top()))
    assert prime_pair_witness(C, Principal(Top())) is None
    assert not is_completely_prime_sym(Q, ContainsAll({1, 2}))
    assert prime_pair_witness(Q, ContainsAll({1, 2})) is not None


def test_points_of():
    chain = points_of(C, 30)
    assert chain.points == tuple(ChainPoint(m) for m in range(1, 31))
    assert chain.non_points == (PrimeTop(),)
    cof = points_of(Q, 30)
    assert Generic() in cof.points and Contains(30) in cof.points
    assert cof.non_points == ()


def test_spectrum_order_derived_from_membership():
    for frame in (C, Q):
        prim = frame.sample_primes(9) + frame.non_point_primes()
        for p in prim:
            for q in prim:
                probe = frame.sample_elements(p, q)
                derived = all(frame.point_contains(q, a) for a in probe if frame.point_contains(p, a))
                assert frame.point_leq(p, q) == derived


def test_specialization_from_zeta():
    # on points, x ≤ y iff every ζ(a) containing x contains y
    for frame in (C, Q):
        pts = [p for p in frame.sample_primes(9) if frame.in_y(p)]
        for p in pts:
            for q in pts:
                probe = frame.sample_elements(p, q)
                derived = all(frame.set_contains(frame.zeta(a), q) for a in probe
                              if frame.set_contains(frame.zeta(a), p))
                assert frame.point_leq(p, q) == derived


def test_k_f_matches_primes_above():
    for frame in (C, Q):
        prim = frame.sample_primes(15) + frame.non_point_primes()
        for F in frame.sample_filters():
            K = frame.k_f(F)
            for p in prim:
                assert frame.set_contains(K, p) == frame.filter_leq(F, frame.point_filter(p))


def test_min_k_examples():
    assert C.min_of(PrefixPoints(4)) == Points({ChainPoint(4)})
    assert C.min_of(AllPrimes()) == Points({PrimeTop()})
    assert Q.min_of(FinitePlusGeneric({1, 2})) == Points({Contains(1), Contains(2)})
    assert Q.min_of(GenericOnly()) == Points({Generic()})
    assert Q.min_of(CofinitePlusGeneric({3})) == CofinitePoints({3})


# -- Hofmann-Mislove on descriptors ----------------------------------------------------------

def test_hm_examples():
    assert hm_map(Q, AllNonzero()) == GenericOnly()
    assert hm_inv(Q, GenericOnly()) == AllNonzero()
    assert hm_map(Q, ContainsAll({2, 7})) == FinitePlusGeneric({2, 7})
    assert hm_map(C, Principal(Nat(3))) == PrefixPoints(3)
    assert hm_map(C, Principal(Nat(0))) == EmptySet()
    assert hm_map(C, Improper()) == EmptySet() and hm_inv(C, EmptySet()) == Improper()
    assert hm_map(Q, Principal(Missing({4}))) == CofinitePlusGeneric({4})
    with pytest.raises(NotScottOpen):
        hm_map(C, Principal(Top()))
    with pytest.raises(FixtureMismatch):
        hm_inv(C, AllPoints())


@given(NATSETS)
@settings(max_examples=150, deadline=None)
def test_hm_round_trip_cofinite(A):
    for F in (ContainsAll(A), Principal(Missing(A))):
        F = Q.canonical_filter(F)
        assert Q.canonical_filter(hm_inv(Q, hm_map(Q, F))) == F
    # hmInv(Q) is the filter of elements whose ζ contains Q
    K = hm_map(Q, Q.canonical_filter(ContainsAll(A)))
    for a in Q.sample_elements(A):
        assert Q.filter_member(hm_inv(Q, K), a) == Q.set_leq(K, Q.zeta(a))


@given(NATSETS, NATSETS)
@settings(max_examples=150, deadline=None)
def test_hm_order_reversal(A, B):
    for F, G in [(ContainsAll(A), ContainsAll(B)), (ContainsAll(A), Principal(Missing(B))),
                 (Principal(Missing(A)), Principal(Missing(B)))]:
        F, G = Q.canonical_filter(F), Q.canonical_filter(G)
        assert Q.filter_leq(F, G) == Q.set_leq(hm_map(Q, G), hm_map(Q, F))


def test_set_leq_matches_enumeration():
    sets = [EmptySet(), GenericOnly(), FinitePlusGeneric({1, 3}), FinitePlusGeneric({1}),
            CofinitePlusGeneric({1}), CofinitePlusGeneric({1, 2}), CofinitePoints({2}),
            Points({Contains(4), Generic()})]
    prim = Q.sample_primes(10)
    for S in sets:
        for T in sets:
            want = all(Q.set_contains(T, p) for p in prim if Q.set_contains(S, p))
            assert Q.set_leq(S, T) == want


def test_corollary59():
    for frame in (C, Q):
        rows = corollary59_sym(frame)
        assert rows and all(r.ok for r in rows)
    cof = {r.filter: r for r in corollary59_sym(Q)}
    assert cof[AllNonzero()].singleton_min and cof[AllNonzero()].completely_prime
    assert not cof[ContainsAll({1, 2})].singleton_min


# -- serialisation ---------------------------------------------------------------------------

DESCS = st.one_of(
    CHAIN_ELEMS, COF_ELEMS,
    st.builds(ContainsAll, NATSETS), st.builds(Principal, COF_ELEMS),
    st.builds(FinitePlusGeneric, NATSETS), st.builds(PrefixPoints, st.integers(1, 50)),
    st.builds(FiniteFamily, st.lists(CHAIN_ELEMS, max_size=4).map(tuple)),
    st.builds(RuleFamily, st.just("refill"), st.tuples(NATSETS)),
    st.builds(Points, st.frozensets(st.builds(Contains, st.integers(0, 9)), max_size=3)),
)


@given(DESCS)
@settings(max_examples=200, deadline=None)
def test_json_round_trip(d):
    text = json.dumps(to_json(d), sort_keys=True)
    assert from_json(json.loads(text)) == d


def test_json_shape():
    assert to_json(Nat(3)) == {"type": "Nat", "k": 3}
    assert to_json(Missing({2, 1})) == {"type": "CofiniteMissing", "missing": [1, 2]}
    with pytest.raises(ValueError):
        from_json({"type": "Nope"})
    with pytest.raises(ValueError):
        from_json({"type": "Nat", "k": 1, "extra": 2})
