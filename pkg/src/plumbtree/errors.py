"""Exception hierarchy shared by all modules."""


class PlumbingError(ValueError):
    """Base class for every error raised by this package."""


class NotATree(PlumbingError):
    pass


class NotBipartite(PlumbingError):
    pass


class NoPerfectMatching(PlumbingError):
    pass


class UnknownVertex(PlumbingError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class WrongColor(PlumbingError):
    pass


class ZeroFraming(PlumbingError):
    pass


class InadmissibleFraming(PlumbingError):
    pass


class MismatchedUnderlying(PlumbingError):
    pass


class EdgesNotOnDirectedPath(PlumbingError):
    pass


class ParseError(PlumbingError):
    """Malformed tree file. Carries 1-based ``line`` and ``column``."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")
