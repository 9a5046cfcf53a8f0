"""Small result records shared by the duality and topology modules."""

from __future__ import annotations

from dataclasses import dataclass

from ._bits import is_subset
from .errors import IsoFailure


@dataclass(frozen=True)
class Bijection:
    """A verified bijection between two families of sets.

    ``forward[i]`` is the index in ``target`` of the image of ``source[i]``.
    ``antitone`` records whether inclusion is reversed (``True``) or
    preserved (``False``) by the map.
    """

    name: str
    source: tuple
    target: tuple
    forward: tuple
    antitone: bool

    def __len__(self):
        return len(self.source)

    def as_dict(self):
        return {
            "name": self.name,
            "size": len(self.source),
            "antitone": self.antitone,
            "pairs": [[s, self.target[j]] for s, j in zip(self.source, self.forward)],
        }


def verify_bijection(name, source, target, fwd, bwd, antitone):
    """Check that ``fwd``/``bwd`` are mutually inverse and order-(anti)isomorphic.

    ``source`` and ``target`` are sequences of bitmasks ordered by inclusion;
    ``fwd`` and ``bwd`` map masks to masks. Raises :class:`IsoFailure` on the
    first violation.
    """
    source, target = tuple(source), tuple(target)
    where = {t: j for j, t in enumerate(target)}
    if len(where) != len(target):
        raise IsoFailure(f"{name}: target family has duplicates")
    forward = []
    for s in source:
        t = fwd(s)
        if t not in where:
            raise IsoFailure(f"{name}: image {t:#b} of {s:#b} is outside the target family")
        if bwd(t) != s:
            raise IsoFailure(f"{name}: backward map does not undo {s:#b}")
        forward.append(where[t])
    if sorted(forward) != list(range(len(target))):
        raise IsoFailure(f"{name}: not onto ({len(set(forward))} of {len(target)} hit)")
    for t in target:
        if fwd(bwd(t)) != t:
            raise IsoFailure(f"{name}: forward map does not undo {t:#b}")
    for i, a in enumerate(source):
        for k, b in enumerate(source):
            lhs = is_subset(a, b)
            ta, tb = target[forward[i]], target[forward[k]]
            rhs = is_subset(tb, ta) if antitone else is_subset(ta, tb)
            if lhs != rhs:
                raise IsoFailure(f"{name}: order not {'reversed' if antitone else 'preserved'} at {a:#b}, {b:#b}")
    return Bijection(name, source, target, tuple(forward), antitone)
