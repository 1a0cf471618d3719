"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad input that the caller could have avoided."""


class AlgebraMismatchError(UsageError):
    """Predicates or letters from two different algebras were mixed."""


class PositiveFragmentError(UsageError):
    """A negated omega-closure has no positive form."""


class ParseError(UsageError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at offset {pos}: {text[:pos]}<HERE>{text[pos:]}"
        super().__init__(message)


class StateCapError(RuntimeError):
    """A fixpoint construction exceeded its configured state budget."""

    def __init__(self, what, cap):
        super().__init__(f"{what}: more than {cap} states")
        self.cap = cap


class OracleDisagreement(AssertionError):
    pass
