"""Exception hierarchy.

Everything raised on purpose by the library derives from ``RingError``.
Parse failures additionally derive from ``ValueError`` so callers that only
know about the standard library still catch them.
"""


class RingError(Exception):
    """Base class for domain errors."""


class NotPrime(RingError):
    pass


class ReducibleModulus(RingError):
    pass


class ZeroRing(RingError):
    pass


class EmptyProduct(RingError):
    pass


class InvalidModulus(RingError):
    pass


class RingMismatch(RingError):
    pass


class TooLarge(RingError):
    pass


class NonMonicDivisor(RingError):
    pass


class NotAProduct(RingError):
    pass


class NotAField(RingError):
    pass


class NotVanishing(RingError):
    pass


class WrongRingShape(RingError):
    pass


class InvalidA(RingError):
    pass


class InvalidNonRootSet(RingError):
    pass


class NotSquarefree(RingError):
    pass


class BudgetExceeded(RingError):
    """A search would exceed its tuple budget.

    ``excluded_up_to`` is the largest degree fully ruled out before giving up
    (0 if none).
    """

    def __init__(self, message, excluded_up_to=0):
        super().__init__(message)
        self.excluded_up_to = excluded_up_to


class NotFoundWithin(RingError):
    def __init__(self, message, max_m):
        super().__init__(message)
        self.max_m = max_m


class CoefficientOutOfRing(RingError):
    pass


class SemanticError(RingError):
    pass


class ParseError(RingError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
