"""Priestley duals of finite distributive lattices and the Scott-upset machinery.

A finite dual is an ordered Stone space whose topology is generated by the
sets ``σ(a)`` and their complements. The topology is computed from that
subbasis rather than assumed discrete, so every "clopen", "closure" and
"open upset" below is evaluated literally; for finite duals it does come
out discrete, which :func:`structural_validators` confirms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._bits import full, is_subset, members, popcount
from .errors import BoundExceeded, IsoFailure
from .lattice import (
    LATTICE_BOUND,
    SCOTT_BOUND,
    Filter,
    enumerate_filters,
    is_completely_prime_finite,
    is_prime,
    is_scott_open_finite,
    lattice_of_sets,
    require_distributive,
    set_label,
)
from .poset import DEFAULT_BOUND, FinPoset, closure, enumerate_upsets, extremes
from .report import verify_bijection


class PriestleyDual:
    """The prime-filter spectrum of a finite distributive lattice.

    Attributes
    ----------
    base : FinLattice
    points : list of Filter
        Proper prime filters, sorted by member mask.
    order : FinPoset
        Inclusion of the filters in ``points``.
    sigma : tuple of int
        ``sigma[a]`` is the mask of points containing lattice element ``a``.
    Y : int
        Mask of points ``x`` with ``↓x`` clopen.
    """

    def __init__(self, base, points):
        self.base = base
        self.points = list(points)
        p = len(self.points)
        leq = [[is_subset(x.members, y.members) for y in self.points] for x in self.points]
        labels = [_point_label(base, x) for x in self.points]
        self.order = FinPoset(np.array(leq, dtype=bool).reshape(p, p), labels)
        self.sigma = tuple(
            sum(1 << i for i, x in enumerate(self.points) if a in x) for a in range(base.n)
        )
        # minimal Stone neighbourhood of each point: intersect every subbasic set containing it
        subbasis = list(self.sigma) + [full(p) & ~s for s in self.sigma]
        self._nbhd = []
        for i in range(p):
            u = full(p)
            for s in subbasis:
                if s >> i & 1:
                    u &= s
            self._nbhd.append(u)
        self.Y = sum(1 << i for i in range(p) if self.is_clopen(self.order.down(i)))

    def __repr__(self):
        return f"PriestleyDual(points={list(self.order.labels)}, covers={self.order.covers()})"

    @property
    def n(self):
        return len(self.points)

    @property
    def full(self):
        return full(self.n)

    def is_open(self, s):
        return all(is_subset(self._nbhd[i], s) for i in members(s))

    def is_closed(self, s):
        return self.is_open(self.full & ~s)

    def is_clopen(self, s):
        return self.is_open(s) and self.is_closed(s)

    def closure(self, s):
        """Smallest Stone-closed superset of ``s``."""
        return sum(1 << i for i in range(self.n) if self._nbhd[i] & s)

    def up(self, s):
        return closure(self.order, s, "up")

    def down(self, s):
        return closure(self.order, s, "down")

    def minimal(self, s):
        return extremes(self.order, s, "min")


def _point_label(L, F):
    gen = L.meet_all(F.elements())
    return "↑" + L.labels[gen]


def dual_space(L, bound=LATTICE_BOUND):
    """Priestley dual of a finite distributive lattice."""
    if L.n > bound:
        raise BoundExceeded("dual_space", L.n, bound)
    require_distributive(L)
    points = [F for F in enumerate_filters(L, bound) if is_prime(L, F)]
    return PriestleyDual(L, points)


@dataclass(frozen=True)
class ClosedUpset:
    """A closed upset of a finite dual, stored as a mask over its points."""

    owner: PriestleyDual = field(compare=False, repr=False)
    members: int

    def __post_init__(self):
        X, m = self.owner, self.members
        X.order.check(m)
        if X.up(m) != m:
            raise ValueError(f"{m:#b} is not an upset")
        if not X.is_closed(m):
            raise ValueError(f"{m:#b} is not closed")
        if X.up(X.minimal(m)) != m:
            raise ValueError(f"{m:#b} is not generated by its minimal points")

    @property
    def minimal(self):
        return self.owner.minimal(self.members)


def closed_upsets(X):
    """``ClUp(X)``: the Stone-closed upsets of the dual order, sorted by mask."""
    return [ClosedUpset(X, u) for u in enumerate_upsets(X.order, DEFAULT_BOUND) if X.is_closed(u)]


def open_upsets(X):
    return [u for u in enumerate_upsets(X.order, DEFAULT_BOUND) if X.is_open(u)]


def clopen_upsets(X):
    return [u for u in enumerate_upsets(X.order, DEFAULT_BOUND) if X.is_clopen(u)]


@dataclass(frozen=True)
class IsoReport:
    """Result of :func:`reconstruct`: the clopen-upset lattice and ``a ↦ σ(a)`` into it."""

    lattice: object
    mapping: tuple

    def as_dict(self):
        return {"size": self.lattice.n, "sigma": [self.lattice.sets[i] for i in self.mapping]}


def reconstruct(X):
    """Rebuild the base lattice as the clopen upsets of ``X`` and verify ``σ`` is an isomorphism.

    Raises :class:`IsoFailure` if ``σ`` fails to be a bijective bounded-lattice
    homomorphism onto the clopen upsets.
    """
    L = X.base
    ups = clopen_upsets(X)
    R = lattice_of_sets(ups, [set_label(X.order.labels, u) for u in sorted(ups)])
    where = {s: i for i, s in enumerate(R.sets)}
    try:
        mapping = tuple(where[X.sigma[a]] for a in range(L.n))
    except KeyError:
        raise IsoFailure("some σ(a) is not a clopen upset") from None
    if sorted(mapping) != list(range(R.n)):
        raise IsoFailure("σ is not a bijection onto the clopen upsets")
    if mapping[L.bottom] != R.bottom or mapping[L.top] != R.top:
        raise IsoFailure("σ does not preserve the bounds")
    for a in range(L.n):
        for b in range(L.n):
            if mapping[L.meet(a, b)] != R.meet(mapping[a], mapping[b]):
                raise IsoFailure(f"σ does not preserve the meet of {a}, {b}")
            if mapping[L.join(a, b)] != R.join(mapping[a], mapping[b]):
                raise IsoFailure(f"σ does not preserve the join of {a}, {b}")
    return IsoReport(R, mapping)


def sigma_embedding_violation(X):
    """First ``(a, b, law)`` where ``σ`` fails to be a lattice embedding of sets, else None.

    Checks ``σ(a∧b) = σ(a)∩σ(b)``, ``σ(a∨b) = σ(a)∪σ(b)`` and ``a ≤ b ⟺ σ(a) ⊆ σ(b)``.
    """
    L, s = X.base, X.sigma
    for a in range(L.n):
        for b in range(L.n):
            if s[L.meet(a, b)] != s[a] & s[b]:
                return a, b, "meet"
            if s[L.join(a, b)] != s[a] | s[b]:
                return a, b, "join"
            if L.le(a, b) != is_subset(s[a], s[b]):
                return a, b, "order"
    return None


def filter_to_k(X, F):
    """``K_F``: the intersection of ``σ(a)`` over ``a ∈ F``."""
    k = X.full
    for a in F.elements():
        k &= X.sigma[a]
    return ClosedUpset(X, k)


def k_to_filter(X, K):
    """``F_K``: the elements ``a`` with ``K ⊆ σ(a)``."""
    m = sum(1 << a for a in range(X.base.n) if is_subset(K.members, X.sigma[a]))
    return Filter(X.base, m)


def filters_vs_closed_upsets(X):
    """The filter / closed-upset correspondence, verified bijective and antitone.

    Returns a :class:`~priestley.report.Bijection` from filter masks to closed-upset masks.
    """
    L = X.base
    filters = enumerate_filters(L)
    ups = [K.members for K in closed_upsets(X)]
    return verify_bijection(
        "Filt(D) -> ClUp(X)",
        [F.members for F in filters],
        ups,
        lambda m: filter_to_k(X, Filter(L, m)).members,
        lambda u: k_to_filter(X, ClosedUpset(X, u)).members,
        antitone=True,
    )


def zeta(X, a):
    """``ζ(a) = σ(a) ∩ Y``."""
    return X.sigma[a] & X.Y


def is_s_upset(X, K):
    """A closed upset is a Scott-upset when its minimal points all lie in ``Y``."""
    return is_subset(K.minimal, X.Y)


class Lemma51(NamedTuple):
    scott_open: bool
    min_in_y: bool
    cond3: bool

    @property
    def coherent(self):
        return self.scott_open == self.min_in_y == self.cond3


def lemma51_predicates(X, F, subsets="all", bound=SCOTT_BOUND):
    """Evaluate the three equivalent conditions on a filter independently.

    1. ``F`` is Scott-open (literal subset check).
    2. ``min K_F ⊆ Y``.
    3. For every open upset ``U``: ``K_F ⊆ cl(U)`` implies ``K_F ⊆ U``.
    """
    scott = is_scott_open_finite(X.base, F, subsets, bound)
    K = filter_to_k(X, F)
    min_in_y = is_s_upset(X, K)
    k = K.members
    cond3 = all(is_subset(k, u) for u in open_upsets(X) if is_subset(k, X.closure(u)))
    return Lemma51(scott, min_in_y, cond3)


@dataclass(frozen=True)
class HMReport:
    """Scott-open filters, Scott-upsets and compact saturated subsets of ``Y``, with the maps between them.

    ``ofilt_to_sup`` and ``sup_to_ksat`` are verified bijections;
    ``composite`` is their composite (antitone). ``ksat`` masks index the
    points of ``Y`` in ascending order (``y_points``).
    """

    y_points: tuple
    ofilt_to_sup: object
    sup_to_ksat: object
    composite: object

    def as_dict(self):
        return {
            "ofilt": len(self.ofilt_to_sup),
            "sup": len(self.sup_to_ksat),
            "ksat": len(self.composite.target),
            "y_points": list(self.y_points),
            "composite": self.composite.as_dict(),
        }


def y_subspace(X):
    """``Y`` with the topology ``{ζ(a)}``, re-indexed ``0..|Y|-1``, plus the index list."""
    from .topspace import FiniteTopSpace

    ys = members(X.Y)
    opens = {_restrict(zeta(X, a), ys) for a in range(X.base.n)}
    return FiniteTopSpace(len(ys), opens), tuple(ys)


def _restrict(s, idx):
    return sum(1 << k for k, i in enumerate(idx) if s >> i & 1)


def _extend(q, idx):
    return sum(1 << i for k, i in enumerate(idx) if q >> k & 1)


def hm_finite_iso(X, subsets="all", bound=SCOTT_BOUND):
    """OFilt(L) ≅ SUp(X) ≅ KSat(Y) on a finite dual, with every map verified.

    OFilt is found through :func:`lemma51_predicates` (all three conditions
    must agree). ``f(K) = K ∩ Y`` and ``g(Q) = ↑Q`` are checked mutually
    inverse and monotone; the composite from filters is checked antitone.
    """
    from .topspace import compact_saturated

    L = X.base
    ofilt = []
    for F in enumerate_filters(L):
        preds = lemma51_predicates(X, F, subsets, bound)
        if not preds.coherent:
            raise IsoFailure(f"conditions disagree on filter {F.members:#b}: {preds}")
        if preds.scott_open:
            ofilt.append(F.members)
    sup = [K.members for K in closed_upsets(X) if is_s_upset(X, K)]
    space, ys = y_subspace(X)
    ksat = compact_saturated(space)

    def f(k):
        return _restrict(k, ys)

    def g(q):
        return X.up(_extend(q, ys))

    def to_k(m):
        return filter_to_k(X, Filter(L, m)).members

    def from_k(k):
        return k_to_filter(X, ClosedUpset(X, k)).members

    first = verify_bijection("OFilt(L) -> SUp(X)", ofilt, sup, to_k, from_k, antitone=True)
    second = verify_bijection("SUp(X) -> KSat(Y)", sup, ksat, f, g, antitone=False)
    composite = verify_bijection(
        "OFilt(L) -> KSat(Y)", ofilt, ksat, lambda m: f(to_k(m)), lambda q: from_k(g(q)), antitone=True
    )
    return HMReport(ys, first, second, composite)


@dataclass(frozen=True)
class Cor59Row:
    filter: int
    completely_prime: bool
    singleton_min: bool
    intersection_of_points: int

    @property
    def ok(self):
        return self.completely_prime == self.singleton_min and self.intersection_of_points == self.filter


def corollary59_check(X, subsets="all", bound=SCOTT_BOUND):
    """For each Scott-open filter: complete primeness vs ``|min K_F| = 1``, and ``F`` vs the meet of its points.

    Returns one :class:`Cor59Row` per Scott-open filter; callers check ``row.ok``.
    """
    L = X.base
    rows = []
    for F in enumerate_filters(L):
        if not is_scott_open_finite(L, F, subsets, bound):
            continue
        K = filter_to_k(X, F)
        inter = full(L.n)
        for x in X.points:
            if is_subset(F.members, x.members):
                inter &= x.members
        rows.append(Cor59Row(
            F.members,
            is_completely_prime_finite(L, F, subsets, bound),
            popcount(K.minimal) == 1,
            inter,
        ))
    return rows


def structural_validators(X, bound=DEFAULT_BOUND):
    """Check the separation axiom, the Esakia condition, extremal order-disconnectedness
    and "downsets of closed sets are closed" on the Stone topology of ``X``.

    Returns a dict mapping each check name to None (pass) or a witness.
    """
    if X.n > bound:
        raise BoundExceeded("structural_validators", X.n, bound)
    P = X.order
    subsets = range(1 << X.n)
    cu = clopen_upsets(X)
    out = {}

    out["priestley_separation"] = None
    for x in range(X.n):
        for y in range(X.n):
            if not P.le(x, y) and not any(u >> x & 1 and not u >> y & 1 for u in cu):
                out["priestley_separation"] = [x, y]
                break
        if out["priestley_separation"]:
            break
    out["esakia"] = next(([s] for s in subsets if X.is_clopen(s) and not X.is_clopen(X.down(s))), None)
    out["extremally_order_disconnected"] = next(
        ([u] for u in open_upsets(X) if not X.is_open(X.closure(u))), None)
    out["downset_of_closed_is_closed"] = next(
        ([s] for s in subsets if X.is_closed(s) and not X.is_closed(X.down(s))), None)
    return out


def spatial_via_density(X):
    """Spatiality decided twice: ``Y`` dense in ``X``, and separation by completely prime filters.

    Raises :class:`IsoFailure` if the two routes disagree.
    """
    L = X.base
    dense = X.closure(X.Y) == X.full
    cp = [F for F in enumerate_filters(L) if is_completely_prime_finite(L, F)]
    separated = all(
        any(a in F and b not in F for F in cp)
        for a in range(L.n) for b in range(L.n) if not L.le(a, b)
    )
    if dense != separated:
        raise IsoFailure(f"density says {dense}, point separation says {separated}")
    return dense


def lemma47_check(X, s):
    """``σ(⋁S) = cl(⋃ σ(s))`` for the element set ``s``."""
    L = X.base
    union = 0
    for a in members(s):
        union |= X.sigma[a]
    return X.sigma[L.join_all(members(s))] == X.closure(union)


def lemma47_all(X, bound=SCOTT_BOUND):
    """:func:`lemma47_check` over every subset of the base lattice; returns the first failure or None."""
    if X.base.n > bound:
        raise BoundExceeded("lemma47_all", X.base.n, bound)
    return next((s for s in range(1 << X.base.n) if not lemma47_check(X, s)), None)
