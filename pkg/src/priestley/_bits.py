"""Subsets of ``range(n)`` encoded as Python ints (bit i set <=> i is a member)."""

from functools import reduce
from operator import or_


def mask(indices):
    return reduce(or_, (1 << i for i in indices), 0)


def members(m):
    """Ascending list of indices present in ``m``."""
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def full(n):
    return (1 << n) - 1


def popcount(m):
    return bin(m).count("1")


def is_subset(a, b):
    return a & ~b == 0


def submasks(m):
    """All submasks of ``m`` (including 0 and ``m``), in descending numeric order."""
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m
