"""Exception hierarchy shared by every module."""


class PriestleyError(Exception):
    """Base class; every error raised deliberately by the package derives from it."""


class IndexOutOfRange(PriestleyError, IndexError):
    pass


class CycleDetected(PriestleyError, ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation has a cycle through {list(self.cycle)}")


class BoundExceeded(PriestleyError):
    def __init__(self, what, size, bound):
        self.what, self.size, self.bound = what, size, bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class NotALattice(PriestleyError, ValueError):
    def __init__(self, a, b, missing):
        self.pair = (a, b)
        self.missing = missing
        super().__init__(f"elements {a} and {b} have no {missing}")


class NotDistributive(PriestleyError, ValueError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"distributive law fails at (a, b, c) = {self.triple}")


class IsoFailure(PriestleyError, AssertionError):
    pass


class NotATopology(PriestleyError, ValueError):
    def __init__(self, reason, witness=()):
        self.reason = reason
        self.witness = tuple(witness)
        super().__init__(f"{reason}: {list(self.witness)}" if witness else reason)


class NotT0(PriestleyError, ValueError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"points {x} and {y} have the same open neighbourhoods")


class NotSober(PriestleyError, ValueError):
    def __init__(self, closed_set):
        self.closed_set = tuple(closed_set)
        super().__init__(
            f"irreducible closed set {list(self.closed_set)} is not the closure of a unique point")


class FixtureMismatch(PriestleyError, TypeError):
    pass


class UnknownRule(PriestleyError, KeyError):
    pass


class NotScottOpen(PriestleyError, ValueError):
    pass


class ParseError(PriestleyError, ValueError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + reason)


class UnsupportedTarget(PriestleyError, ValueError):
    pass
