"""Exception hierarchy.

Every error carries a short ``code`` used by the CLI as a stable prefix on
the error stream.
"""

from __future__ import annotations


class VisConnError(Exception):
    code = "error"


class HullsIntersect(VisConnError):
    code = "hulls-intersect"


class IndexOutOfRange(VisConnError, IndexError):
    code = "index-out-of-range"


class OverlappingSets(VisConnError):
    code = "overlapping-sets"


class TooLarge(VisConnError):
    code = "too-large"


class NotAPartition(VisConnError):
    code = "not-a-partition"


class DiameterTooLarge(VisConnError):
    code = "diameter-too-large"


class PreconditionViolated(VisConnError):
    code = "precondition"


class PointNotOnCurve(VisConnError):
    code = "point-not-on-curve"


class SideConditionsFailed(VisConnError):
    code = "side-conditions"

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(f"{condition}: {message}" if message else condition)


class Unsatisfiable(VisConnError):
    code = "unsatisfiable"


class ParseError(VisConnError):
    code = "parse"
