"""Exception types shared across the package."""


class CircleActionError(Exception):
    """Base class for all errors raised by this package."""


class NotEffective(CircleActionError):
    """Weights have a common divisor greater than 1."""


class NotCoprime(CircleActionError):
    """A pair of weights that must be coprime is not."""


class IndexOutOfRange(CircleActionError):
    """A coordinate index lies outside 1..m."""


class LengthMismatch(CircleActionError):
    """An exponent vector or point has the wrong number of coordinates."""


class EmptyAction(CircleActionError):
    """The action has no weighted coordinates (m = 0)."""


class NotInvariant(CircleActionError):
    """An exponent vector with nonzero rotation weight where an invariant one
    is required."""


class UnknownStratum(CircleActionError):
    """A stratum id that does not belong to the diagram."""


class DistinguishedStratum(CircleActionError):
    """The fixed-point stratum was passed where a finite-order stratum is
    required."""


class MalformedDiagram(CircleActionError):
    """A stratification diagram that cannot have come from an effective
    linear circle action."""


class NoDistinguishedStratum(MalformedDiagram):
    """The diagram lacks a unique infinite-order stratum, or yields m = 0."""


class ParityError(MalformedDiagram):
    """A dimension difference that must be even is odd."""


class NegativeMultiplicity(MalformedDiagram):
    """The weight-count recursion went negative at some stratum."""


class CountMismatch(MalformedDiagram):
    """The recovered weight count disagrees with the inferred m."""
