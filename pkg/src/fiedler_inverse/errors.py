"""Exception hierarchy shared by the whole package.

Every failure mode that callers are expected to branch on gets its own
class; generic bad arguments raise InvalidParameterError.  The CLI maps
these onto exit codes (input problems -> 2, mathematical inadmissibility
-> 3), so library code should raise the most specific class available.
"""


class FiedlerInverseError(Exception):
    """Base class for all package-specific errors."""


class InvalidGraphError(FiedlerInverseError):
    """Malformed graph: bad edge list, disconnected, cyclic, wrong size."""


class InvalidVertexError(InvalidGraphError):
    """A vertex index outside range(n)."""


class InvalidWeightError(FiedlerInverseError):
    """A weight assignment whose domain or positivity is wrong."""


class InvalidInputError(FiedlerInverseError):
    """Non-finite or structurally impossible numeric input."""


class InvalidParameterError(FiedlerInverseError):
    """An argument outside its documented domain (mu < 1, lam <= 0, ...)."""


class BoundaryNotLeafError(FiedlerInverseError):
    """Dirichlet incidence requested for a branch whose boundary is internal."""


class DivisionStructureError(FiedlerInverseError):
    """Entrywise division hit y_i = 0 with x_i != 0."""

    def __init__(self, index, numerator):
        self.index = index
        self.numerator = numerator
        super().__init__(
            f"entry {index}: division of nonzero {numerator!r} by exact zero"
        )


class DegeneratePerronError(FiedlerInverseError):
    """Smallest Dirichlet eigenvalue not simple, or eigenvector not positive."""


class NumericalAmbiguityError(FiedlerInverseError):
    """Characteristic-set location could not produce a unique, consistent answer."""


class NotFiedlerLikeError(FiedlerInverseError):
    """Inverse construction asked for a vector outside the required class."""

    def __init__(self, verdict, expected=None):
        self.verdict = verdict
        if expected is not None and verdict.kind != "Rejected":
            msg = f"vector classifies as {verdict.kind}, expected {expected}"
        else:
            msg = f"vector rejected: {verdict.reason}"
        super().__init__(msg)


class NotIncreasingError(FiedlerInverseError):
    """Dirichlet reconstruction input is not strictly increasing away from r."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(
            f"vector not strictly increasing across edge {edge} (difference <= 0)"
        )


class NotInDomainError(FiedlerInverseError):
    """Transform applied to a weighted tree outside its domain class."""


class NotRealizableError(FiedlerInverseError):
    """Cycle inverse asked for a vector that is not periodic and balanced."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"vector not realizable: {verdict.reason}")


class DegenerateInputError(FiedlerInverseError):
    """Numerically empty feasibility window (cannot occur for exact input)."""


class WrongCaseError(FiedlerInverseError):
    """Feasibility window requested in a plateau case where h is forced."""
