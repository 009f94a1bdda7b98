"""Exception types shared across the package."""


class SuperSchurError(Exception):
    """Base class for all errors raised by superschur."""


class CapExceeded(SuperSchurError, ValueError):
    """A resource cap (partition size, degree, space dimension) was exceeded."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(f"{what} = {value} exceeds the configured limit {limit}")


class ShapeError(SuperSchurError, ValueError):
    """Incompatible shapes or spaces."""


class PreconditionError(SuperSchurError, ValueError):
    """An operation was called on input violating its precondition."""


class ContractViolation(SuperSchurError, ValueError):
    """A user-supplied oracle does not satisfy its documented contract."""


class CapTooSmall(SuperSchurError, ValueError):
    """A search ran out of room before reaching an answer."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"no answer found within cap {cap}")


class InternalInconsistency(SuperSchurError, RuntimeError):
    """A mathematical invariant failed; indicates a bug, never expected."""
