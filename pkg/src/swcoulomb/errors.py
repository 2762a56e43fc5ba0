"""Exception hierarchy shared by every module of the package."""


class SWCoulombError(Exception):
    """Base class for all errors raised by swcoulomb."""


class DomainError(SWCoulombError, ValueError):
    """An argument lies outside the domain of the function."""


class SingularPointError(DomainError):
    """A point lies on a coordinate hyperplane, the origin, or a barrier."""


class ConvergenceError(SWCoulombError, ArithmeticError):
    """A series or iteration did not converge within its term budget."""


class PoleError(SWCoulombError, ArithmeticError):
    """Evaluation requested at (or numerically indistinguishable from) a pole."""


class QuadratureError(SWCoulombError, ArithmeticError):
    """Two successive quadrature orders disagree by more than allowed."""


class BracketError(SWCoulombError, ArithmeticError):
    """A root bracket does not contain a sign change."""


class BoxTooSmallError(SWCoulombError, ArithmeticError):
    """The radial box truncates the lowest eigenfunction."""
