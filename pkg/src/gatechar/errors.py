"""Exception types shared across the package."""


class GateCharError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GateCharError):
    """An operand has an unsupported shape or dimension."""


class PreconditionError(GateCharError):
    """An input violates a documented precondition (normalization, unitarity, range)."""


class NumericError(GateCharError):
    """A numerical routine failed to reach its accuracy or convergence target."""
