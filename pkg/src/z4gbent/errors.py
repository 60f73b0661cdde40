"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: input errors to 2, capacity errors to 3.
"""


class Z4GbentError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(Z4GbentError, ValueError):
    """Operands have incompatible lengths."""


class InputError(Z4GbentError, ValueError):
    """Malformed user input (vector strings, matrix files, ANF text)."""


class ANFSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PreconditionError(Z4GbentError, ValueError):
    """A construction hypothesis does not hold for the given input."""


class CapacityError(Z4GbentError):
    """The request exceeds a fixed enumeration or search limit."""


class InconsistentInputError(Z4GbentError, ValueError):
    """Data that should be mutually consistent is not (e.g. a MacWilliams
    transform produced a non-integer count)."""


class ConstructionError(Z4GbentError, RuntimeError):
    """An internal self-check failed. Always a bug, never silent."""


class NonlinearImageError(Z4GbentError):
    """The Gray image of the code is not a linear binary code."""
