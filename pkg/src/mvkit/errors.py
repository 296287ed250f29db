class MvError(ValueError):
    """Base class for invalid inputs to mvkit operations."""


class DimensionError(MvError):
    pass


class RangeError(MvError):
    pass


class SizeGuardError(MvError):
    """A brute-force search was asked to run above its size guard."""


class PreconditionError(MvError):
    """An operation's algebraic precondition does not hold (e.g. not an ideal)."""


class InvariantError(AssertionError):
    """An internal cross-check failed; indicates a bug rather than a finding."""


class ParseError(MvError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
