"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class SpreadBorelError(ValueError):
    """Base class for every error raised on bad input."""


class MonomialSyntaxError(SpreadBorelError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class IndexRangeError(SpreadBorelError):
    pass


class NotSpreadError(SpreadBorelError):
    """A monomial (or generator) fails the t-spread gap condition."""


class DegreeExceedsArityError(NotSpreadError):
    """Degree larger than d = len(t) + 1."""


class NotStronglyStableError(SpreadBorelError):
    pass


class NotInIdealError(SpreadBorelError):
    pass


class ZeroIdealError(SpreadBorelError):
    """The requested invariant is undefined for the zero ideal."""


class OracleCapError(SpreadBorelError):
    """A brute-force oracle refused an input beyond its size cap."""

    def __init__(self, count: int, cap: int, message: str):
        self.count = count
        self.cap = cap
        super().__init__(message)


class GeneratorCapError(OracleCapError):
    def __init__(self, count: int, cap: int):
        super().__init__(count, cap, f"{count} generators exceed the Taylor oracle cap of {cap}")


class LatticeCapError(OracleCapError):
    def __init__(self, count: int, cap: int):
        super().__init__(count, cap, f"lcm lattice has more than {cap} elements (reached {count})")


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
