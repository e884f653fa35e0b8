"""Exception hierarchy shared by all modules."""


class ToricError(Exception):
    """Base class for every error raised by this package."""


class PreconditionViolated(ToricError):
    pass


class DuplicateColumns(ToricError):
    pass


class NotHomogeneous(ToricError):
    pass


class NoIntegerHomogenizingRow(ToricError):
    pass


class NotInIdeal(ToricError):
    pass


class NotNormalized(ToricError):
    pass


class WalkNotEven(ToricError):
    pass


class WalkNotClosed(ToricError):
    pass


class DegenerateWalk(ToricError):
    pass


class TooLarge(ToricError):
    pass


class InvalidGraph(ToricError):
    pass


class ParseError(ToricError):
    pass
