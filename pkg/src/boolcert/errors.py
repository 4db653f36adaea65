"""Exception hierarchy shared by every module."""


class BoolcertError(Exception):
    """Base class for all errors raised by boolcert."""


class AmbientMismatchError(BoolcertError, ValueError):
    """Operands live in rings (or act on sets) of different sizes."""


class ParseError(BoolcertError, ValueError):
    """Malformed polynomial, permutation or system-file text.

    ``position`` is a 0-based character offset into the parsed text, ``line``
    a 1-based line number when the text came from a system file.
    """

    def __init__(self, message, position=None, line=None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"col {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class VariableIndexError(ParseError):
    """A variable index is not below the ambient variable count."""

    def __init__(self, index, ambient_n, position=None, line=None):
        self.index = index
        self.ambient_n = ambient_n
        super().__init__(
            f"variable x{index} out of range for vars: {ambient_n}", position, line
        )


class CapExceededError(BoolcertError):
    """A brute-force enumeration would exceed its configured cap."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} too large: {size} exceeds cap {cap}")


class EmptyDestabilizerError(BoolcertError):
    """The zero-column test is vacuous because every permutation fixes F."""


class CertificateError(BoolcertError, AssertionError):
    """An internal consistency check failed.

    Raised when a construction produces something that contradicts its own
    defining property (a witness that does not vanish, a cofactor identity
    that does not re-expand, a term bound that is exceeded). Never caught.
    """
