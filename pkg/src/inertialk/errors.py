"""Exception types raised by the library."""


class InertialKError(Exception):
    pass


class DivisionByZero(InertialKError, ZeroDivisionError):
    pass


class NotInvertible(DivisionByZero):
    pass


class NonDivisibleConductor(InertialKError, ValueError):
    def __init__(self, N, M):
        super().__init__(f"conductor {N} does not divide {M}")
        self.N, self.M = N, M


class ConductorMismatch(InertialKError, ValueError):
    def __init__(self, N, M):
        super().__init__(f"cannot combine elements of conductors {N} and {M} without embedding")
        self.N, self.M = N, M


class DimensionMismatch(InertialKError, ValueError):
    pass


class UnitAxiomFailure(InertialKError, ValueError):
    pass


class NonCommutative(InertialKError, ValueError):
    pass


class ParentMismatch(InertialKError, ValueError):
    pass


class FieldTooSmall(InertialKError):
    def __init__(self, required: int, msg: str = ""):
        super().__init__(msg or f"splitting requires conductor {required}")
        self.required = required


class PsiOutOfRange(InertialKError, ValueError):
    pass


class NotLineElement(InertialKError, ValueError):
    pass


class NotLambdaPositive(InertialKError, ValueError):
    pass


class UnsupportedWeight(InertialKError, ValueError):
    pass


class UnknownFamily(InertialKError, KeyError):
    pass


class BoundExceeded(InertialKError, RuntimeError):
    pass


class NoIsomorphismFound(InertialKError, RuntimeError):
    pass
