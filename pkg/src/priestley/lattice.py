"""Finite bounded distributive lattices, their filters, and the ideal frame.

Lattice elements are indices into the underlying :class:`~priestley.poset.FinPoset`.
Subsets of a lattice (filters, the families ``S`` quantified over in the
Scott-open and compactness checks) are bitmasks, as in the poset module.

Conventions: the join of the empty family is the bottom, the meet of the
empty family is the top, and the improper filter (the whole lattice) is a
filter. Prime and completely prime filters are proper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._bits import full, members
from .errors import BoundExceeded, IsoFailure, NotALattice, NotDistributive
from .poset import DEFAULT_BOUND, FinPoset, enumerate_downsets

#: Largest lattice on which the literal "for every subset S of L" checks run.
SCOTT_BOUND = 12
#: Largest lattice accepted by the enumerating constructions in this package.
LATTICE_BOUND = 64

SUBSET_MODES = ("all", "downsets", "auto")


class FinLattice:
    """A finite lattice with precomputed meet and join tables.

    Built by :func:`build_lattice`, which validates that every pair has a
    glb and a lub. ``sets`` is filled in when the lattice is a family of
    sets ordered by inclusion (downsets, opens, ideals, upsets of a dual):
    ``sets[i]`` is the bitmask of the set that element ``i`` stands for.
    """

    def __init__(self, poset, meet, join, bottom, top, sets=None):
        self.poset = poset
        self.meet_table = meet
        self.join_table = join
        self.bottom = bottom
        self.top = top
        self.sets = None if sets is None else tuple(sets)

    def __repr__(self):
        return f"FinLattice(n={self.n}, covers={self.poset.covers()})"

    @property
    def n(self):
        return self.poset.n

    @property
    def labels(self):
        return self.poset.labels

    def le(self, a, b):
        return bool(self.poset.leq[a, b])

    def meet(self, a, b):
        return int(self.meet_table[a, b])

    def join(self, a, b):
        return int(self.join_table[a, b])

    def join_all(self, elems):
        out = self.bottom
        jt = self.join_rows
        for x in elems:
            out = jt[out][x]
        return out

    def meet_all(self, elems):
        out = self.top
        mt = self.meet_table
        for x in elems:
            out = mt[out, x]
        return int(out)

    def up(self, a):
        return self.poset.up(a)

    def down(self, a):
        return self.poset.down(a)

    def index(self, label):
        return self.labels.index(label)

    @cached_property
    def join_rows(self):
        """The join table as nested Python lists (faster to index than the array)."""
        return self.join_table.tolist()

    @cached_property
    def subset_joins(self):
        """``subset_joins[S]`` is the join of the subset with bitmask ``S``; only for small lattices."""
        if self.n > SCOTT_BOUND:
            raise BoundExceeded("subset join table", self.n, SCOTT_BOUND)
        jt = self.join_rows
        table = [self.bottom] * (1 << self.n)
        for s in range(1, 1 << self.n):
            low = s & -s
            table[s] = jt[table[s ^ low]][low.bit_length() - 1]
        return table


def build_lattice(P):
    """Turn a finite poset into a :class:`FinLattice`, or raise :class:`NotALattice`."""
    if P.n < 1:
        raise ValueError("a lattice needs at least one element")
    n = P.n
    up = [P.up(i) for i in range(n)]
    down = [P.down(i) for i in range(n)]
    by_up = {m: i for i, m in enumerate(up)}
    by_down = {m: i for i, m in enumerate(down)}
    meet = np.empty((n, n), dtype=np.intp)
    join = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        for b in range(a, n):
            # the least upper bound is the x whose upset equals the set of upper bounds
            lub = by_up.get(up[a] & up[b])
            glb = by_down.get(down[a] & down[b])
            if lub is None:
                raise NotALattice(P.labels[a], P.labels[b], "join")
            if glb is None:
                raise NotALattice(P.labels[a], P.labels[b], "meet")
            join[a, b] = join[b, a] = lub
            meet[a, b] = meet[b, a] = glb
    full_mask = full(n)
    bottom = by_up[full_mask] if full_mask in by_up else None
    top = by_down[full_mask] if full_mask in by_down else None
    meet.setflags(write=False)
    join.setflags(write=False)
    return FinLattice(P, meet, join, bottom, top)


def lattice_of_sets(sets, labels=None):
    """Lattice of a family of bitmasks ordered by inclusion.

    The family is sorted by ascending mask; the returned lattice's element
    ``i`` is ``sorted(sets)[i]``. Joins are least upper bounds inside the
    family, which need not be unions.
    """
    sets = sorted(set(sets))
    n = len(sets)
    leq = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            leq[i, j] = a & ~b == 0
    L = build_lattice(FinPoset(leq, labels))
    L.sets = tuple(sets)
    return L


def check_distributive(L):
    """First triple ``(a, b, c)`` with ``a∧(b∨c) != (a∧b)∨(a∧c)``, or None if distributive.

    Triples are scanned in lexicographic order.
    """
    M, J = L.meet_table, L.join_table
    lhs = M[np.arange(L.n)[:, None, None], J[None, :, :]]
    rhs = J[M[:, :, None], M[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def is_distributive(L):
    return check_distributive(L) is None


def downset_lattice(P, bound=DEFAULT_BOUND):
    """Lattice of all downsets of ``P`` under inclusion; bottom is the empty set, top is ``P``."""
    if P.n > bound:
        raise BoundExceeded("downset_lattice", P.n, bound)
    downs = enumerate_downsets(P, bound)
    return lattice_of_sets(downs, [set_label(P.labels, d) for d in downs])


def set_label(labels, s):
    if not s:
        return "∅"
    return "{" + ",".join(labels[i] for i in members(s)) + "}"


@dataclass(frozen=True)
class Filter:
    """A filter of ``lattice``: nonempty, upward closed, closed under binary meet.

    Equality and hashing use ``members`` only.
    """

    lattice: FinLattice = field(compare=False, repr=False)
    members: int

    def __post_init__(self):
        L, m = self.lattice, self.members
        if not m:
            raise ValueError("a filter is nonempty")
        if m >> L.n:
            raise ValueError(f"filter mask {m:#b} outside the lattice")
        elems = members(m)
        for a in elems:
            if L.up(a) & ~m:
                raise ValueError(f"{m:#b} is not upward closed at {L.labels[a]}")
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                if not m >> L.meet(a, b) & 1:
                    raise ValueError(f"{m:#b} is not closed under the meet of {a}, {b}")

    def __contains__(self, a):
        return bool(self.members >> a & 1)

    @property
    def proper(self):
        return self.members != full(self.lattice.n)

    def elements(self):
        return members(self.members)


def principal_filter(L, a):
    return Filter(L, L.up(a))


def improper_filter(L):
    return Filter(L, full(L.n))


def filter_generated(L, s):
    """Smallest filter containing the element set ``s``; ``{top}`` when ``s`` is empty."""
    return principal_filter(L, L.meet_all(members(s)))


def enumerate_filters(L, bound=LATTICE_BOUND):
    """All filters of ``L`` (improper one included), sorted by ascending member mask.

    In a finite lattice every filter contains the meet of its members, so the
    filters are exactly the principal ones.
    """
    if L.n > bound:
        raise BoundExceeded("enumerate_filters", L.n, bound)
    return sorted((principal_filter(L, a) for a in range(L.n)), key=lambda F: F.members)


def is_prime(L, F):
    """Proper, and ``a∨b ∈ F`` implies ``a ∈ F`` or ``b ∈ F``."""
    if not F.proper:
        return False
    m = F.members
    J = L.join_table
    for a in range(L.n):
        if m >> a & 1:
            continue
        for b in range(a, L.n):
            if not m >> b & 1 and m >> int(J[a, b]) & 1:
                return False
    return True


def subfamilies(L, subsets="all", bound=SCOTT_BOUND):
    """The families ``S`` quantified over by the literal checks.

    Returns a list of ``(mask, ⋁S, members of S in descending order)``.
    ``"all"`` gives every subset of ``L`` and refuses lattices larger than
    ``bound``. ``"downsets"`` gives only the downsets of ``L``; this is
    enough for the Scott-open, compactness and complete-primeness conditions
    because each of them holds for ``S`` iff it holds for ``↓S`` (upward
    closure lets a finite ``T ⊆ ↓S`` be pushed up into ``S``).
    ``"auto"`` picks ``"all"`` when ``L.n <= bound`` and ``"downsets"`` otherwise.
    """
    if subsets not in SUBSET_MODES:
        raise ValueError(f"subsets must be one of {SUBSET_MODES}, got {subsets!r}")
    if subsets == "auto":
        subsets = "all" if L.n <= bound else "downsets"
    if subsets == "all" and L.n > bound:
        raise BoundExceeded("exhaustive subset check", L.n, bound)
    cache = L.__dict__.setdefault("_subfamilies", {})
    if subsets not in cache:
        if subsets == "all":
            masks = range(1 << L.n)
            joins = L.subset_joins
        else:
            masks = enumerate_downsets(L.poset, bound=None)
            joins = {s: L.join_all(members(s)) for s in masks}
        cache[subsets] = [(s, joins[s], tuple(reversed(members(s)))) for s in masks]
    return cache[subsets]


def _finite_witness(L, elems, target):
    """Search a finite ``T`` among ``elems`` whose join lies in the upset ``target``.

    Candidates are the prefixes of ``elems`` (starting with ``T = ∅``); the
    found ``T`` is returned as a mask, or None when no prefix works.
    """
    acc = L.bottom
    t = 0
    if target >> acc & 1:
        return t
    jt = L.join_rows
    for x in elems:
        acc = jt[acc][x]
        t |= 1 << x
        if target >> acc & 1:
            return t
    return None


def is_scott_open_finite(L, F, subsets="all", bound=SCOTT_BOUND):
    """Literal check: ``⋁S ∈ F`` implies ``⋁T ∈ F`` for some finite ``T ⊆ S``."""
    return scott_counterexample(L, F, subsets, bound) is None


def scott_counterexample(L, F, subsets="all", bound=SCOTT_BOUND):
    """A family ``S`` violating Scott-openness of ``F``, or None."""
    m = F.members
    for s, j, elems in subfamilies(L, subsets, bound):
        if m >> j & 1 and _finite_witness(L, elems, m) is None:
            return s
    return None


def is_completely_prime_finite(L, F, subsets="auto", bound=SCOTT_BOUND):
    """Literal check: ``⋁S ∈ F`` implies ``S ∩ F ≠ ∅``, for every family ``S``.

    The improper filter fails through ``S = ∅`` since ``⋁∅`` is the bottom.
    """
    m = F.members
    for s, j, _ in subfamilies(L, subsets, bound):
        if m >> j & 1 and not s & m:
            return False
    return True


def is_compact_element(L, a, subsets="all", bound=SCOTT_BOUND):
    """Literal check: ``a ≤ ⋁S`` implies ``a ≤ ⋁T`` for some finite ``T ⊆ S``."""
    target = L.up(a)
    for s, j, elems in subfamilies(L, subsets, bound):
        if target >> j & 1 and _finite_witness(L, elems, target) is None:
            return False
    return True


def is_ideal(L, s):
    """Nonempty downset closed under binary joins."""
    if not s:
        return False
    elems = members(s)
    for a in elems:
        if L.down(a) & ~s:
            return False
    return all(s >> L.join(a, b) & 1 for i, a in enumerate(elems) for b in elems[i:])


def ideal_lattice(L, bound=LATTICE_BOUND, verify_compact=True):
    """The frame of ideals of ``L`` and the map ``a ↦ ↓a`` into it.

    Returns ``(I, iso)`` where ``iso[a]`` is the index in ``I`` of ``↓a``.
    The map is checked to be an order isomorphism. With ``verify_compact``
    the compact elements of ``I`` (found by :func:`is_compact_element`) are
    checked to be exactly the principal ideals.
    """
    if L.n > bound:
        raise BoundExceeded("ideal_lattice", L.n, bound)
    ideals = [s for s in enumerate_downsets(L.poset, bound=None) if is_ideal(L, s)]
    idl = lattice_of_sets(ideals, [set_label(L.labels, s) for s in sorted(ideals)])
    where = {s: i for i, s in enumerate(idl.sets)}
    iso = []
    for a in range(L.n):
        if L.down(a) not in where:
            raise IsoFailure(f"principal ideal of {L.labels[a]} missing")
        iso.append(where[L.down(a)])
    if sorted(iso) != list(range(idl.n)):
        raise IsoFailure("a ↦ ↓a is not onto the ideals")
    for a in range(L.n):
        for b in range(L.n):
            if L.le(a, b) != idl.le(iso[a], iso[b]):
                raise IsoFailure(f"a ↦ ↓a does not reflect the order at ({a}, {b})")
    if verify_compact:
        compact = {i for i in range(idl.n) if is_compact_element(idl, i, subsets="auto")}
        if compact != set(iso):
            raise IsoFailure("compact ideals differ from principal ideals")
    return idl, tuple(iso)


def require_distributive(L):
    bad = check_distributive(L)
    if bad is not None:
        raise NotDistributive(tuple(L.labels[i] for i in bad))
    return L

