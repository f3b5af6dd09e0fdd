"""Shared exception types.

Exit-code mapping used by the CLI lives in ``cli.py``; library code raises
these directly and never calls ``sys.exit``.
"""


class SdocpError(Exception):
    """Base class for all package errors."""


class ValidationError(SdocpError):
    """An instance violates a structural invariant (symmetry, rank, start)."""


class ParseError(SdocpError):
    """Malformed input file; message carries location context."""


class EliminationBlowupError(SdocpError):
    """An intermediate polynomial exceeded the configured degree cap."""


class TooLargeError(SdocpError):
    """The nonlinear core after linear reduction has too many unknowns."""


class SeparationFailureError(SdocpError):
    """No tried coordinate or random linear form separates the solutions."""


class NumericFailureError(SdocpError):
    """A numerical routine (corrector, eigensolver, fit) failed to converge."""


class CertificationError(SdocpError):
    """An exact certificate check failed; message names the violated item."""


class BranchUnboundedError(SdocpError):
    """A root branch escapes to infinity as the parameter goes to zero."""


class TrackingAmbiguityError(SdocpError):
    """Interval continuation could not separate root branches."""
