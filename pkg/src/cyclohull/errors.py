"""Exception hierarchy shared by every module of the package."""


class CycloHullError(Exception):
    """Base class for all package errors."""


class NotPrime(CycloHullError, ValueError):
    pass


class NotCoprime(CycloHullError, ValueError):
    pass


class InternalSearchExhausted(CycloHullError, RuntimeError):
    """A deterministic search that must succeed ran out of candidates."""


class DivisionByZero(CycloHullError, ZeroDivisionError):
    pass


class FieldMismatch(CycloHullError, TypeError):
    pass


class NotADivisor(CycloHullError, ValueError):
    pass


class NotInSubfield(CycloHullError, ValueError):
    pass


class CoefficientNotInSubfield(NotInSubfield):
    """A minimal polynomial coefficient escaped F_q (internal defect)."""


class ZeroConstantTerm(CycloHullError, ValueError):
    pass


class BothZero(CycloHullError, ValueError):
    pass


class LengthMismatch(CycloHullError, ValueError):
    pass


class LengthNotQmMinus1(CycloHullError, ValueError):
    pass


class ExponentZero(CycloHullError, ValueError):
    pass


class DuplicateCoset(CycloHullError, ValueError):
    pass


class NotNormal(CycloHullError, ValueError):
    pass


class SameCoset(CycloHullError, ValueError):
    pass


class DimensionMismatch(CycloHullError, ValueError):
    pass
