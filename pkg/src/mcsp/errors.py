"""Exception hierarchy shared by every module of the package."""


class McspError(Exception):
    """Base class for all errors raised by :mod:`mcsp`."""


class InvalidInstance(McspError, ValueError):
    """The two input strings do not form a valid related pair."""


class EmptyInput(InvalidInstance):
    pass


class LengthMismatch(InvalidInstance):
    pass


class MultisetMismatch(InvalidInstance):
    pass


class OutOfBounds(McspError, IndexError):
    pass


class VertexOutOfRange(McspError, IndexError):
    pass


class GraphPairMismatch(McspError, ValueError):
    pass


class MissingVariable(McspError, KeyError):
    pass


class InfeasibleAssignment(McspError, ValueError):
    pass


class SinkWriteFailure(McspError, OSError):
    pass


class BothZero(McspError, ZeroDivisionError):
    pass


class ZeroBaseline(McspError, ZeroDivisionError):
    pass


class InstanceTooLarge(McspError, ValueError):
    pass


class EmptyAlphabet(McspError, ValueError):
    pass


class ZeroLength(McspError, ValueError):
    pass


class FormatError(McspError, ValueError):
    pass


class UnknownVariable(FormatError):
    pass


class NonBinaryValue(FormatError):
    pass
