"""Exception hierarchy shared by all modules."""


class EnergyOpError(ValueError):
    """Base class for every contract violation raised by this package."""


class OrderOutOfRange(EnergyOpError):
    """An operator or difference order lies outside its supported domain."""


class SignalTooShort(EnergyOpError):
    """The input is too short for the operator window (empty valid range)."""


class InvalidParameter(EnergyOpError):
    """A generator, oracle or sweep parameter violates its invariant."""


class UnsupportedKind(EnergyOpError):
    """No closed form or implementation exists for the requested kind."""


class EmptyRange(EnergyOpError):
    """A reduction was asked to operate on zero samples."""
