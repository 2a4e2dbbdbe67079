"""Exception hierarchy.

The CLI maps these onto exit codes: :class:`InputError` subclasses are usage or
parse problems (1), :class:`VerificationFailed` is a failed check (2), and
:class:`InvariantViolation` subclasses mean a mathematical guarantee broke,
i.e. a bug (3).
"""


class LowcellError(Exception):
    """Base class for all package errors."""


class InputError(LowcellError, ValueError):
    pass


class DatumError(InputError):
    """Malformed or inconsistent root datum description."""


class NotDominantForLevi(InputError):
    pass


class IncompatibleI(InputError):
    """Double cosets taken with respect to different parabolic subsets."""


class NotDivisible(LowcellError, ArithmeticError):
    """No exact Laurent polynomial quotient exists."""


class InvariantViolation(LowcellError, RuntimeError):
    pass


class NegativeMultiplicity(InvariantViolation):
    pass


class InvariantCheckFailed(InvariantViolation):
    pass


class VerificationFailed(LowcellError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
