"""
Errors Module
Exception hierarchy shared by every twistlab module.
"""


class TwistlabError(Exception):
    """Base class for all workbench errors."""


class InputError(TwistlabError):
    """Malformed expression or violated precondition (exit status 2)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VerificationFailure(TwistlabError):
    """An exact verification failed; `witness` names the offending data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TheoremViolation(VerificationFailure):
    """Two independent computations of the same statement disagree."""


class ReconstructionError(TwistlabError):
    """Modular search exhausted its prime budget."""


class UnavailableError(TwistlabError):
    """Requested data lies outside the supported families."""


class NotHopfSubalgebra(TwistlabError):
    """A subspace offered as a Hopf subalgebra fails one of the closure tests (exit status 1)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
