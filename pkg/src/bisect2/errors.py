"""Exception hierarchy for the bisect2 package."""

from __future__ import annotations


class Bisect2Error(Exception):
    """Base class for every error raised by this package."""


class GraphError(Bisect2Error, ValueError):
    pass


class LoopRejected(GraphError):
    def __init__(self, index: int):
        super().__init__(f"edge {index} is a loop")
        self.index = index


class EndpointOutOfRange(GraphError):
    def __init__(self, index: int):
        super().__init__(f"edge {index} has an endpoint out of range")
        self.index = index


class CodecError(Bisect2Error, ValueError):
    pass


class MalformedHeader(CodecError):
    pass


class PayloadLengthMismatch(CodecError):
    pass


class NonCanonicalPadding(CodecError):
    pass


class NotSimple(CodecError):
    pass


class MalformedColouring(CodecError):
    pass


class StructureViolation(Bisect2Error):
    """Input claimed to be bridgeless claw-free cubic but fits no structural variant."""


class InvalidStructure(Bisect2Error, ValueError):
    pass


class NoPerfectMatching(Bisect2Error):
    pass


class NotTwoRegular(Bisect2Error):
    pass


class ConstructionError(Bisect2Error):
    """A step of the 2-bisection construction produced an inconsistent state."""


class OddCircuit(ConstructionError):
    pass


class LengthMismatch(Bisect2Error, ValueError):
    pass


class PreconditionFailed(Bisect2Error):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class UnknownName(Bisect2Error, KeyError):
    pass


class TooSmall(Bisect2Error, ValueError):
    pass


class NoSuchEdge(Bisect2Error, IndexError):
    pass


class GenerationFailed(Bisect2Error):
    pass


class OddOrder(Bisect2Error, ValueError):
    pass


class OverCap(Bisect2Error, ValueError):
    pass
