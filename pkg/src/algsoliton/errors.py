"""Exception types raised across the package."""


class AlgSolitonError(Exception):
    """Base class for every error raised by algsoliton."""


class ParseError(AlgSolitonError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownParameter(ParseError):
    pass


class ParameterError(AlgSolitonError, ValueError):
    """An operation that needs parameter-free input received a rational function."""


class DimensionMismatch(AlgSolitonError, ValueError):
    pass


class SingularMatrix(AlgSolitonError, ZeroDivisionError):
    pass


class IndexOutOfRange(AlgSolitonError, IndexError):
    pass


class JacobiViolation(AlgSolitonError):
    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = residual
        super().__init__(
            f"Jacobi identity fails on basis triple {triple}: residual {list(map(str, residual))}"
        )


class NotSymmetric(AlgSolitonError, ValueError):
    pass


class Degenerate(AlgSolitonError, ValueError):
    pass


class NotADerivation(AlgSolitonError, ValueError):
    pass


class NearDegenerate(AlgSolitonError, ArithmeticError):
    def __init__(self, t, det):
        self.t = t
        self.det = det
        super().__init__(f"metric became near-degenerate at t={t:g} (det={det:.3e})")
