"""Exception types shared by the library and the command line."""


class InputError(ValueError):
    """Malformed or inconsistent input (exit code 2 on the command line)."""


class NotWeightedHomogeneous(InputError):
    """Raised when a polynomial has no admissible weight system.

    ``reason`` is one of ``"no-positive-solution"``, ``"not-unique"`` or
    ``"inconsistent"`` (weights were supplied but do not fit).
    """

    def __init__(self, message, reason="inconsistent", offending=()):
        super().__init__(message)
        self.reason = reason
        self.offending = tuple(offending)


class NotIsolatedError(InputError):
    """The quotient algebra is infinite dimensional (singularity not isolated)."""


class HypothesisError(InputError):
    """A theorem's standing assumptions are not met by the input."""
