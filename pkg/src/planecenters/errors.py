"""Exception hierarchy shared by all modules."""


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DegenerateRayError(GeometryError):
    """A ray was requested from a point to itself."""


class NotCyclicError(GeometryError):
    """The points do not lie on a common circle."""


class AmbiguousArcError(GeometryError):
    """The smallest arc between two antipodal angles is not unique."""


class EmptyInputError(GeometryError):
    """An operation that needs at least one point got none."""


class PreconditionError(GeometryError):
    """The input is outside the documented domain of an algorithm."""


class DomainError(GeometryError):
    """A target point lies outside the set of admissible center values."""


class ContractViolation(RuntimeError):
    """An internal guarantee of a construction did not hold.

    ``where`` names the construction and step whose guarantee failed, so the
    report can point at the exact place in the algorithm.
    """

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"[{where}] {message}")
