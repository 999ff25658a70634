"""Exception hierarchy.

Every domain failure derives from :class:`NegBundleError`, which is what the
command line front end maps to exit status 3.
"""


class NegBundleError(ValueError):
    """Base class for all domain errors raised by the package."""


class PresentationMismatchError(NegBundleError):
    """An element refers to generators that the ring presentation lacks."""


class CapExceededError(NegBundleError):
    """A term or request exceeds the degree cap of a truncated ring."""


class NonUnitError(NegBundleError):
    """Inversion was requested for an element with zero constant term."""


class UnsupportedParameterError(NegBundleError):
    """Parameters outside the supported range (non-prime p, n too small, ...)."""


class ParityError(NegBundleError):
    """A parity constraint such as ``r = q mod 2`` is violated."""


class BranchMismatchError(NegBundleError):
    """A ring case does not match the parameters it is used with."""


class InconsistencyError(NegBundleError):
    """Two independently computed quantities disagree."""


class UnsupportedClassError(NegBundleError):
    """An operation was applied to a class it is not defined on."""


class NumericError(NegBundleError):
    """A floating point evaluation produced a non-finite value."""
