"""Exception hierarchy shared by every subpackage."""


class TorusError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TorusError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(DomainError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"{line}:{col}: " if col is not None else f"{line}: "
        super().__init__(f"{where}{message}")


class UnsortableError(DomainError):
    """Both dimensions are odd and the arrangement is an odd permutation."""

    def __init__(self, m, n, parity):
        self.m = m
        self.n = n
        self.parity = parity
        super().__init__(
            f"{m}x{n} board is unsortable: m and n are both odd and the "
            f"arrangement permutation is {parity.name.lower()} (needs an even "
            f"dimension or an even permutation)"
        )


class StateCapError(DomainError):
    def __init__(self, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(f"state space has {required} states, cap is {cap}")


class ContractError(TorusError, RuntimeError):
    """A procedure was called on a configuration violating its precondition."""


class InternalError(TorusError, RuntimeError):
    """A safety cap tripped; indicates a bug rather than bad input."""
