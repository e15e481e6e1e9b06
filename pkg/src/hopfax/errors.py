"""Exception types for structural failures.

Errors that wrap a validation report keep it on the ``report`` attribute so
callers can inspect the failing law and witness tuple.
"""


class HopfaxError(Exception):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotInvertible(HopfaxError):
    pass


class InvalidCotwist(HopfaxError):
    pass


class InvalidGauge(HopfaxError):
    pass


class InvalidPair(HopfaxError):
    pass


class InvalidCocycle(HopfaxError):
    pass


class NotAssociativeType(HopfaxError):
    pass


class NotSubalgebra(HopfaxError):
    pass


class NotEquivariant(HopfaxError):
    pass


class NotCoinvariantValued(HopfaxError):
    pass


class LambdaNotWellDefined(HopfaxError):
    pass


class LambdaNotInvertible(HopfaxError):
    pass


class PreconditionViolated(HopfaxError):
    pass


class InternalDisagreement(HopfaxError):
    pass


class NotGalois(HopfaxError):
    def __init__(self, message, reason, report=None):
        super().__init__(message, report)
        self.reason = reason  # "shape mismatch" | "rank deficient"


class CarrierNotPreserved(HopfaxError):
    pass


class AxiomFailed(HopfaxError):
    def __init__(self, message, which, report=None):
        super().__init__(message, report)
        self.which = which


class UnknownEntry(HopfaxError):
    pass
