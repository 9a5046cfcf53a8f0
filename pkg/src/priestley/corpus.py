"""Small-instance generators: posets up to isomorphism, finite topologies, named lattices."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from ._bits import full
from .lattice import build_lattice, downset_lattice
from .poset import FinPoset, antichain, build_poset, chain
from .topspace import FiniteTopSpace


def _canonical(leq, perms):
    return min(leq[np.ix_(p, p)].tobytes() for p in perms)


@lru_cache(maxsize=None)
def posets_up_to_iso(n):
    """One representative of each isomorphism class of ``n``-element posets.

    Every class has a naturally labelled member (``i < j`` in the order
    implies ``i < j`` as integers), so only strict relations above the
    diagonal are generated; transitivity is checked and duplicates removed
    by a canonical form minimised over all relabellings.
    """
    if n < 1:
        return ()
    pairs = list(combinations(range(n), 2))
    perms = [list(p) for p in permutations(range(n))]
    seen = {}
    for pick in range(1 << len(pairs)):
        leq = np.eye(n, dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if pick >> k & 1:
                leq[i, j] = True
        li = leq.astype(np.int64)
        if ((li @ li > 0) & ~leq).any():
            continue
        key = _canonical(leq, perms)
        if key not in seen:
            seen[key] = FinPoset(leq)
    return tuple(seen[k] for k in sorted(seen))


def topologies(n):
    """Every topology on ``range(n)`` (labelled, not up to homeomorphism), in a fixed order."""
    whole = full(n)
    middle = [s for s in range(1, whole)]
    out = []
    for pick in range(1 << len(middle)):
        opens = {0, whole} | {middle[i] for i in range(len(middle)) if pick >> i & 1}
        if all(a | b in opens and a & b in opens for a in opens for b in opens):
            out.append(FiniteTopSpace(n, opens))
    return out


def diamond():
    """``0 < a, b < 1``: the four-element Boolean lattice."""
    return build_lattice(build_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["0", "a", "b", "1"]))


def m3():
    """Three pairwise incomparable atoms between a bottom and a top (not distributive)."""
    return build_lattice(build_poset(
        5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ["0", "a", "b", "c", "1"]))


def n5():
    """The pentagon ``0 < a < c < 1``, ``0 < b < 1`` (not distributive)."""
    return build_lattice(build_poset(
        5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], ["0", "a", "b", "c", "1"]))


def chain_lattice(k):
    return build_lattice(chain(k))


def boolean_lattice(atoms):
    """``2^atoms`` as the downsets of an antichain."""
    return downset_lattice(antichain(atoms))


def v_poset():
    """``0 < 1``, ``0 < 2``: has no top, so it is not a lattice."""
    return build_poset(3, [(0, 1), (0, 2)])


def corpus_lattices(max_poset=5, max_chain=8, max_atoms=4):
    """The distributive test corpus as ``(name, lattice)`` pairs.

    Downset lattices of every poset with at most ``max_poset`` elements (one
    per isomorphism class), chains up to ``max_chain`` elements, Boolean
    lattices up to ``2**max_atoms`` elements, and the diamond.
    """
    out = []
    for n in range(1, max_poset + 1):
        for i, P in enumerate(posets_up_to_iso(n)):
            out.append((f"down(P{n}.{i})", downset_lattice(P)))
    out += [(f"chain{k}", chain_lattice(k)) for k in range(1, max_chain + 1)]
    out += [(f"bool{1 << a}", boolean_lattice(a)) for a in range(1, max_atoms + 1)]
    out.append(("diamond", diamond()))
    return out
