"""Exception types shared across the package.

The CLI maps these onto exit codes: parse errors exit 1, invalid states or
bindings exit 2, failed internal consistency checks exit 3.
"""


class EntfamError(Exception):
    """Base class for all errors raised by this package."""


class DiracParseError(EntfamError):
    """Syntax error in a state expression or scalar literal.

    Carries the zero-based character position of the offending input.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class StateError(EntfamError):
    """Invalid state, binding, or precondition violation on user input."""


class InternalCheckError(EntfamError):
    """A built-in self-check failed; indicates a bug, not bad input."""
