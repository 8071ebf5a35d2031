"""Exception types shared across the package."""


class RingCodesError(Exception):
    """Base class for all errors raised by :mod:`ringcodes`."""


class DomainError(RingCodesError, ValueError):
    """An operation is undefined for its operands (e.g. inverting zero)."""


class PreconditionError(RingCodesError, ValueError):
    """A documented precondition of an operation does not hold."""


class CapExceeded(RingCodesError):
    """An exhaustive computation would exceed its enumeration or size cap.

    Caps are never silently truncated; raise the cap explicitly if the
    computation is really wanted.
    """

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(
            f"{what}: enumeration too large ({size} > cap {cap}); "
            f"raise the cap (max_enum / max_dim) to force it"
        )


class ParseError(RingCodesError, ValueError):
    """Malformed ring descriptor, element or polynomial text."""
