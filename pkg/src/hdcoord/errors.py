"""Exception hierarchy shared by the library and the command line."""


class HDError(Exception):
    """Base class for every error raised by :mod:`hdcoord`."""


class InvalidWordError(HDError, ValueError):
    """A word uses a letter outside ``c1 .. c2g``."""


class InvalidInputError(HDError, ValueError):
    """Dimension mismatch or an object that does not belong to the diagram."""


class DiagramParseError(HDError, ValueError):
    """Syntax or semantic error in diagram text.

    ``kind`` is ``"syntax"`` or ``"semantic"``; ``line`` is 1-based, or
    ``None`` for errors that concern the file as a whole.
    """

    def __init__(self, message, line=None, kind="syntax"):
        self.message = message
        self.line = line
        self.kind = kind
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{kind} error: {message}")


class UnknownFixtureError(HDError, KeyError):
    def __init__(self, name, available):
        self.name = name
        self.available = list(available)
        super().__init__(name)

    def __str__(self):
        return f"unknown fixture {self.name!r}; available: {', '.join(self.available)}"


class NoDiskError(HDError, ValueError):
    """Raised when a quantity is only defined for generators joined by a Whitney disk."""
