"""Exception hierarchy shared by every hyperion module."""


class HyperionError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ParseError(HyperionError, ValueError):
    """Malformed input text (CLI exit code 2)."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class DepthExceeded(HyperionError):
    pass


class NotOmegaPower(HyperionError):
    pass


class EmptyCut(HyperionError):
    pass


class OrderViolation(HyperionError):
    pass


class NotFinite(HyperionError):
    pass


class DegenerateCut(HyperionError):
    pass


class UnitMonomial(HyperionError):
    pass


class InfiniteSupport(HyperionError):
    pass


class InfiniteSupportDerivative(InfiniteSupport):
    def __init__(self, monomial):
        self.monomial = monomial
        super().__init__(f"derivative undefined on interval-support monomial {monomial}")


class ZeroSeries(HyperionError):
    pass


class NotLogarithmic(HyperionError):
    pass


class NotAtomic(HyperionError):
    pass


class TransfiniteLevel(HyperionError):
    pass


class DomainError(HyperionError):
    pass
