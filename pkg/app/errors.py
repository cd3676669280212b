"""Domain exceptions. Overflow uses the built-in OverflowError."""

INT64_MAX = 2**63 - 1


class InvalidInputError(ValueError):
    """Input violates a documented precondition."""


class ClosedFormRangeError(ValueError):
    """No closed form is known for the requested term."""


class InternalError(RuntimeError):
    """An engine invariant failed; this is a bug, not a user error."""


def check_int64(value: int, what: str = "value") -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"{what} {value} exceeds the signed 64-bit range")
    return value
