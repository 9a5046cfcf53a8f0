"""Finite posets and the upset/downset calculus.

Element sets are Python ints used as bitmasks over ``range(P.n)``; see
:mod:`priestley._bits` for the helpers. Every set-valued result is such a
mask, and every list of sets is sorted by ascending mask value.
"""

from __future__ import annotations

import graphlib
from functools import cached_property

import numpy as np

from ._bits import full, mask, members
from .errors import BoundExceeded, CycleDetected, IndexOutOfRange

#: Largest poset for which :func:`enumerate_upsets` runs unless told otherwise.
DEFAULT_BOUND = 20


class FinPoset:
    """Immutable finite partial order on ``range(n)``.

    ``leq[i, j]`` is True iff ``i <= j``. The matrix is read-only and is
    validated as a partial order on construction. ``n == 0`` is allowed here
    (it appears as the dual of the one-element lattice); :func:`build_poset`
    is the user-facing constructor and rejects it.
    """

    def __init__(self, leq, labels=None):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"leq must be square, got shape {leq.shape}")
        n = leq.shape[0]
        if not leq.diagonal().all():
            raise ValueError("leq is not reflexive")
        strict = leq & ~np.eye(n, dtype=bool)
        if (strict & strict.T).any():
            i, j = map(int, np.argwhere(strict & strict.T)[0])
            raise ValueError(f"leq is not antisymmetric at ({i}, {j})")
        if n and ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise ValueError("leq is not transitive")
        leq.setflags(write=False)
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ValueError("labels must be unique")
        self.n = n
        self.leq = leq
        self.labels = labels
        self._up = tuple(mask(int(j) for j in np.flatnonzero(leq[i])) for i in range(n))
        self._down = tuple(mask(int(j) for j in np.flatnonzero(leq[:, i])) for i in range(n))

    def __repr__(self):
        return f"FinPoset(n={self.n}, covers={self.covers()})"

    def __eq__(self, other):
        if not isinstance(other, FinPoset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.labels, self.leq.tobytes()))

    def le(self, i, j):
        return bool(self.leq[i, j])

    def up(self, i):
        """Mask of the principal upset of ``i``."""
        return self._up[i]

    def down(self, i):
        return self._down[i]

    @property
    def full(self):
        return full(self.n)

    def covers(self):
        """Hasse diagram edges ``(i, j)`` with ``j`` covering ``i``, sorted."""
        return self._covers

    @cached_property
    def _covers(self):
        out = []
        for i in range(self.n):
            above = self._up[i] & ~(1 << i)
            for j in members(above):
                between = above & self._down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def dual(self):
        return FinPoset(self.leq.T, self.labels)

    def check(self, s):
        """Raise :class:`IndexOutOfRange` unless ``s`` is a subset of ``range(n)``."""
        if s < 0 or s >> self.n:
            raise IndexOutOfRange(f"set {s:#b} has members outside range({self.n})")
        return s


def build_poset(n, covers, labels=None):
    """Poset on ``range(n)`` whose order is the reflexive-transitive closure of ``covers``.

    ``covers`` holds pairs ``(i, j)`` meaning ``i < j``; they need not be a
    minimal generating set.

    >>> build_poset(2, [(0, 1)]).le(0, 1)
    True
    """
    if n < 1:
        raise ValueError("a poset needs at least one element")
    preds = {i: set() for i in range(n)}
    for a, b in covers:
        for x in (a, b):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"cover endpoint {x} not in range({n})")
        preds[b].add(a)
    try:
        order = list(graphlib.TopologicalSorter(preds).static_order())
    except graphlib.CycleError as exc:
        raise CycleDetected(exc.args[1]) from None
    below = [1 << i for i in range(n)]
    for v in order:
        for p in preds[v]:
            below[v] |= below[p]
    leq = np.zeros((n, n), dtype=bool)
    for j in range(n):
        leq[members(below[j]), j] = True
    return FinPoset(leq, labels)


def chain(n):
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return build_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return build_poset(n, [])


def closure(P, s, direction="up"):
    """``↑s`` (``direction="up"``) or ``↓s`` (``"down"``) as a mask."""
    P.check(s)
    table = {"up": P._up, "down": P._down}[direction]
    out = 0
    for i in members(s):
        out |= table[i]
    return out


def is_upset(P, s):
    return closure(P, s, "up") == s


def is_downset(P, s):
    return closure(P, s, "down") == s


def extremes(P, s, which="min"):
    """Minimal (or maximal) members of ``s``: no strictly smaller (larger) member inside ``s``."""
    P.check(s)
    table = {"min": P._down, "max": P._up}[which]
    return mask(i for i in members(s) if table[i] & s == 1 << i)


def enumerate_upsets(P, bound=DEFAULT_BOUND):
    """All upsets of ``P`` sorted by ascending mask.

    Works by branching on each undecided element (put it in, which forces
    its upset in; or leave it out, which forces its downset out), so the
    cost is proportional to the number of upsets rather than ``2**n``.
    """
    if bound is not None and P.n > bound:
        raise BoundExceeded("enumerate_upsets", P.n, bound)
    up, down, n = P._up, P._down, P.n
    out = []

    def walk(i, inside, outside):
        while i < n and (inside | outside) >> i & 1:
            i += 1
        if i == n:
            out.append(inside)
            return
        if not up[i] & outside:
            walk(i + 1, inside | up[i], outside)
        if not down[i] & inside:
            walk(i + 1, inside, outside | down[i])

    walk(0, 0, 0)
    out.sort()
    return out


def enumerate_downsets(P, bound=DEFAULT_BOUND):
    return enumerate_upsets(P.dual(), bound)
