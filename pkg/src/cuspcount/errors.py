"""Exception hierarchy.

Everything a caller can trigger with bad input derives from
:class:`PreconditionError` (and therefore from ``ValueError``); the CLI maps
those to exit status 2. :class:`InvariantError` signals an internal
consistency failure and maps to exit status 3.
"""


class PreconditionError(ValueError):
    """An input violates an operation's precondition."""


class WeightOutOfScope(PreconditionError):
    """Weight 1 (or lower) modular forms are not handled."""


class NotPrimeError(PreconditionError):
    pass


class NotFundamentalDiscriminant(PreconditionError):
    pass


class NonSupercuspidal(PreconditionError):
    """A local conductor below 2 cannot come from a supercuspidal representation."""


class HypothesisViolated(PreconditionError):
    """The level exponent is outside the range where the lower bound is claimed."""


class NotCohomological(PreconditionError):
    """The archimedean component is not of cohomological type J(w, l)."""


class WeightOne(PreconditionError):
    """Weight-one cusp forms are excluded from the no-overlap argument."""


class InvariantError(RuntimeError):
    """An internal identity that must hold exactly did not."""
