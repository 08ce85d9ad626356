"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`ChaslesError`.
The CLI maps :class:`InputError` subclasses to exit code 2 and
:class:`DegeneracyError` subclasses to exit code 3.
"""


class ChaslesError(Exception):
    pass


class InputError(ChaslesError, ValueError):
    """Malformed or inconsistent input."""


class DegeneracyError(ChaslesError, ArithmeticError):
    """The input is well formed but mathematically degenerate."""


class ParseError(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class DegenerateHull(DegeneracyError):
    pass


class DegenerateConfiguration(DegeneracyError):
    pass


class ZeroBase(DegeneracyError):
    pass


class ZeroPolynomial(DegeneracyError):
    pass


class InexactDivision(DegeneracyError):
    pass


class NonInvertibleSubstitution(DegeneracyError):
    pass


class DegenerateInput(DegeneracyError):
    """Evaluation matrix of the given points has deficient rank."""

    def __init__(self, message, rank=None, expected=None):
        super().__init__(message)
        self.rank = rank
        self.expected = expected


class NotEssential(DegeneracyError):
    """No unique essential subset exists, so the resultant is 1 by convention."""


class FaceSystemDegenerate(DegeneracyError):
    def __init__(self, message, normal=None):
        super().__init__(message)
        self.normal = normal


class SignResolutionFailure(DegeneracyError):
    pass


class ExtraneousFactorAmbiguity(DegeneracyError):
    pass


class RationalReconstructionFailure(DegeneracyError):
    pass


class IllConditioned(DegeneracyError):
    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class PositiveDimensional(DegeneracyError):
    pass
