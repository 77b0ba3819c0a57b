"""Exception types raised by the library."""


class SpringerGreenError(Exception):
    """Base class for all library errors."""


class SizeMismatch(SpringerGreenError, ValueError):
    pass


class PartNotPresent(SpringerGreenError, ValueError):
    pass


class EmptyShape(SpringerGreenError, ValueError):
    pass


class DegreeTooSmall(SpringerGreenError, ValueError):
    pass


class RankTooSmall(SpringerGreenError, ValueError):
    pass


class InvalidLabel(SpringerGreenError, ValueError):
    pass


class InvalidParabolic(SpringerGreenError, ValueError):
    pass


class InvalidJordanType(SpringerGreenError, ValueError):
    pass
