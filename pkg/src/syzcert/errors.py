"""Exception types shared by the engines and the command line."""


class InputError(ValueError):
    """Raised for malformed or out-of-range user input."""


class PreconditionError(InputError):
    """A documented precondition of an operation does not hold.

    ``violations`` lists every failed precondition, not only the first.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NonCanonicalInput(UserWarning):
    """Input was accepted after normalization (e.g. trailing zeros dropped)."""
