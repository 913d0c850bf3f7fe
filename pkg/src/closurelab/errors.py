"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ClosureLabError(Exception):
    """Base class for all errors raised by closurelab."""


class AxiomViolation(ClosureLabError):
    """Raised when singleton closures break the Čech axioms.

    ``violations`` is a list of ``(axiom, point)`` pairs, e.g. ``[("C2", 0)]``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        desc = ", ".join(f"{ax} at point {x}" for ax, x in self.violations)
        super().__init__(f"closure axioms violated: {desc}")


class SizeMismatch(ClosureLabError, ValueError):
    pass


class PointOutOfRange(ClosureLabError, IndexError):
    pass


class CarrierMismatch(ClosureLabError, ValueError):
    pass


class SpaceMismatch(ClosureLabError, ValueError):
    pass


class EmptyList(ClosureLabError, ValueError):
    pass


class SizeOverflow(ClosureLabError, ValueError):
    pass


class BoundExceeded(ClosureLabError, ValueError):
    pass


class NotATopology(ClosureLabError, ValueError):
    pass


class NotAnInteriorCover(ClosureLabError, ValueError):
    pass


class SectionNotContinuous(ClosureLabError, ValueError):
    def __init__(self, z: int):
        self.z = z
        super().__init__(f"section g({z}, -) is not continuous")


class IndexMismatch(ClosureLabError, ValueError):
    pass


class IndexOutOfRange(ClosureLabError, IndexError):
    pass


class UnknownTheoremId(ClosureLabError, KeyError):
    pass


class UnknownPredicate(ClosureLabError, KeyError):
    pass


class ParseError(ClosureLabError, ValueError):
    pass
