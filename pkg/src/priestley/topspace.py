"""Finite topological spaces: open-set frames, sobriety, compact saturated sets.

A space is a point count plus the full list of its open sets (bitmasks).
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ._bits import full, is_subset, members
from .errors import BoundExceeded, IsoFailure, NotATopology, NotSober, NotT0
from .lattice import (
    SCOTT_BOUND,
    enumerate_filters,
    is_completely_prime_finite,
    is_scott_open_finite,
    lattice_of_sets,
    require_distributive,
    set_label,
)
from .poset import DEFAULT_BOUND, FinPoset, enumerate_upsets
from .report import verify_bijection

#: Largest number of opens for which compactness is checked against every open cover.
COVER_BOUND = 12


class FiniteTopSpace:
    """Finite space on ``range(n)``; ``opens`` is deduplicated and sorted ascending.

    Construction validates that the empty set and the whole space are open
    and that opens are closed under binary union and intersection.
    """

    def __init__(self, n, opens, labels=None):
        opens = sorted(set(int(u) for u in opens))
        whole = full(n)
        for u in opens:
            if u < 0 or u >> n:
                raise NotATopology("open set has points outside the space", members(u) if u >= 0 else [u])
        if not opens or opens[0] != 0:
            raise NotATopology("the empty set is not open")
        if opens[-1] != whole:
            raise NotATopology("the whole space is not open")
        present = set(opens)
        for a, b in combinations(opens, 2):
            if a | b not in present:
                raise NotATopology("not closed under union", [members(a), members(b)])
            if a & b not in present:
                raise NotATopology("not closed under intersection", [members(a), members(b)])
        self.n = n
        self.opens = tuple(opens)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self._nbhd = []
        for x in range(n):
            u = whole
            for v in opens:
                if v >> x & 1:
                    u &= v
            self._nbhd.append(u)

    def __repr__(self):
        return f"FiniteTopSpace(n={self.n}, opens={[members(u) for u in self.opens]})"

    def __eq__(self, other):
        if not isinstance(other, FiniteTopSpace):
            return NotImplemented
        return self.n == other.n and self.opens == other.opens

    def __hash__(self):
        return hash((self.n, self.opens))

    @property
    def full(self):
        return full(self.n)

    def nbhd(self, x):
        """Smallest open set containing ``x``."""
        return self._nbhd[x]

    def is_open(self, s):
        return s in self.opens

    def closed_sets(self):
        return sorted(self.full & ~u for u in self.opens)

    def closure(self, s):
        return sum(1 << x for x in range(self.n) if self._nbhd[x] & s)

    def interior_saturation(self, s):
        """Intersection of all opens containing ``s`` (the saturation of ``s``)."""
        out = self.full
        for u in self.opens:
            if is_subset(s, u):
                out &= u
        return out


def build_space(n, opens, labels=None):
    """Space on ``range(n)`` from open sets given as lists of point indices."""
    return FiniteTopSpace(n, [sum(1 << x for x in set(u)) for u in opens], labels)


def discrete(n):
    return FiniteTopSpace(n, range(1 << n))


def indiscrete(n):
    return FiniteTopSpace(n, {0, full(n)})


def alexandrov(P, bound=DEFAULT_BOUND):
    """Space on the elements of ``P`` whose opens are the upsets of ``P``."""
    return FiniteTopSpace(P.n, enumerate_upsets(P, bound), P.labels)


def open_frame(X):
    """The lattice of opens of ``X`` under inclusion (checked distributive)."""
    L = lattice_of_sets(X.opens, [set_label(X.labels, u) for u in X.opens])
    return require_distributive(L)


def t0_violation(X):
    """A pair of distinct points with the same open neighbourhoods, or None."""
    for x in range(X.n):
        for y in range(x + 1, X.n):
            if X.nbhd(x) >> y & 1 and X.nbhd(y) >> x & 1:
                return x, y
    return None


def is_t0(X):
    return t0_violation(X) is None


def specialization(X):
    """``x ≤ y`` iff ``x`` lies in the closure of ``{y}``; raises :class:`NotT0` on non-T0 input."""
    bad = t0_violation(X)
    if bad is not None:
        raise NotT0(*bad)
    leq = [[bool(X.closure(1 << y) >> x & 1) for y in range(X.n)] for x in range(X.n)]
    return FinPoset(np.array(leq, dtype=bool).reshape(X.n, X.n), X.labels)


def sobriety_violation(X, bound=DEFAULT_BOUND):
    """An irreducible closed set that is not the closure of exactly one point, or None."""
    if X.n > bound:
        raise BoundExceeded("is_sober", X.n, bound)
    closed = X.closed_sets()
    point_closures = [X.closure(1 << x) for x in range(X.n)]
    for c in closed:
        if not c:
            continue
        proper = [d for d in closed if is_subset(d, c) and d != c]
        if any(a | b == c for a in proper for b in proper):
            continue
        if sum(pc == c for pc in point_closures) != 1:
            return c
    return None


def is_sober(X, bound=DEFAULT_BOUND):
    """Every irreducible closed set is the closure of exactly one point."""
    return sobriety_violation(X, bound) is None


def is_compact(X, k, cover_bound=COVER_BOUND):
    """Every open cover of ``k`` has a finite subcover.

    With at most ``cover_bound`` opens every family of opens is tried;
    otherwise the families are drawn from the basis of minimal
    neighbourhoods, which decides compactness equally well. For each
    covering family a subfamily is built by picking, per point of ``k``,
    the first member containing it, and that subfamily is checked to cover.
    """
    pool, unions, holders = _cover_tables(X, cover_bound)
    pts = members(k)
    for pick, union in enumerate(unions):
        if k & ~union:
            continue
        sub = 0
        for x in pts:
            hit = pick & holders[x]
            sub |= hit & -hit
        if k & ~unions[sub]:
            return False
    return True


def _cover_tables(X, cover_bound):
    cache = X.__dict__.setdefault("_cover_tables", {})
    if cover_bound not in cache:
        pool = list(X.opens) if len(X.opens) <= cover_bound else sorted(set(X._nbhd))
        if len(pool) > cover_bound:
            raise BoundExceeded("is_compact cover pool", len(pool), cover_bound)
        unions = [0] * (1 << len(pool))
        for pick in range(1, len(unions)):
            low = pick & -pick
            unions[pick] = unions[pick ^ low] | pool[low.bit_length() - 1]
        holders = [sum(1 << i for i, u in enumerate(pool) if u >> x & 1) for x in range(X.n)]
        cache[cover_bound] = (pool, unions, holders)
    return cache[cover_bound]


def compact_saturated(X, bound=DEFAULT_BOUND, cover_bound=COVER_BOUND):
    """``KSat(X)``: compact saturated subsets, sorted by mask.

    A set is taken as saturated when it equals the intersection of the opens
    containing it; the list is cross-checked against the upsets of the
    specialization order.
    """
    if X.n > bound:
        raise BoundExceeded("compact_saturated", X.n, bound)
    P = specialization(X)
    sat = [s for s in range(1 << X.n) if X.interior_saturation(s) == s]
    if sat != enumerate_upsets(P, bound):
        raise IsoFailure("saturated sets differ from upsets of the specialization order")
    return [s for s in sat if is_compact(X, s, cover_bound)]


def hofmann_mislove(X, subsets="all", bound=SCOTT_BOUND):
    """Scott-open filters of ``O(X)`` against compact saturated sets of a sober ``X``.

    Every filter of the finite frame is checked Scott-open; then
    ``F ↦ ⋂F`` and ``K ↦ {U open : K ⊆ U}`` are verified mutually inverse
    and order-reversing. Returns the :class:`~priestley.report.Bijection`
    from filter masks (over the frame) to saturated-set masks.
    """
    bad = sobriety_violation(X)
    if bad is not None:
        raise NotSober(members(bad))
    L = open_frame(X)
    filters = enumerate_filters(L)
    ofilt = [F.members for F in filters if is_scott_open_finite(L, F, subsets, bound)]
    if len(ofilt) != len(filters):
        raise IsoFailure("a filter of a finite frame failed the Scott-open check")
    ksat = compact_saturated(X)

    def meet_of(m):
        out = X.full
        for a in members(m):
            out &= L.sets[a]
        return out

    def nbhd_filter(k):
        return sum(1 << a for a in range(L.n) if is_subset(k, L.sets[a]))

    return verify_bijection("OFilt(O(X)) -> KSat(X)", ofilt, ksat, meet_of, nbhd_filter, antitone=True)


def frame_point_filters(L):
    """Completely prime filters of ``L``, sorted by member mask."""
    require_distributive(L)
    return [F for F in enumerate_filters(L) if is_completely_prime_finite(L, F)]


def frame_points_finite(L):
    """Space of points of ``L``: completely prime filters with opens ``{ζ(a)}``.

    Point ``i`` is ``frame_point_filters(L)[i]``.
    """
    pts = frame_point_filters(L)
    opens = {sum(1 << i for i, F in enumerate(pts) if a in F) for a in range(L.n)}
    labels = ["↑" + L.labels[L.meet_all(F.elements())] for F in pts]
    return FiniteTopSpace(len(pts), opens, labels)


def points_homeomorphism(X):
    """Verify ``x ↦ {U : x ∈ U}`` is a homeomorphism from sober ``X`` onto the points of ``O(X)``.

    Returns the map as a tuple ``h`` with ``h[x]`` the index of the image point.
    """
    L = open_frame(X)
    pts = frame_point_filters(L)
    Y = frame_points_finite(L)
    where = {F.members: i for i, F in enumerate(pts)}
    h = []
    for x in range(X.n):
        m = sum(1 << a for a in range(L.n) if L.sets[a] >> x & 1)
        if m not in where:
            raise IsoFailure(f"neighbourhood filter of point {x} is not completely prime")
        h.append(where[m])
    if sorted(h) != list(range(Y.n)):
        raise IsoFailure("neighbourhood map is not a bijection onto the points")
    image = {sum(1 << h[x] for x in members(u)) for u in X.opens}
    if image != set(Y.opens):
        raise IsoFailure("neighbourhood map does not match the open sets")
    return tuple(h)


def spectral_from_priestley(X):
    """The open-upset topology on a finite dual, checked against the closed upsets.

    Raises :class:`IsoFailure` unless the closed upsets of ``X`` are exactly
    the compact saturated sets of the resulting space.
    """
    from .duality import closed_upsets, open_upsets

    space = FiniteTopSpace(X.n, open_upsets(X), X.order.labels)
    clup = [K.members for K in closed_upsets(X)]
    if clup != compact_saturated(space):
        raise IsoFailure("closed upsets differ from compact saturated sets of the open-upset topology")
    return space
