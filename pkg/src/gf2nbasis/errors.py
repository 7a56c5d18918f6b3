"""Exception hierarchy shared by all modules."""


class GF2Error(Exception):
    """Base class for all gf2nbasis errors."""


class ParameterError(GF2Error, ValueError):
    """An argument violates an operation's precondition."""


class NotNormalBasisError(GF2Error, ValueError):
    """The pair (n, k) does not define a Gaussian normal basis."""


class ImageError(GF2Error, ArithmeticError):
    """A polynomial is not in the image of the coset embedding.

    Raised by project_back when folded coefficients are not constant on
    cosets; signals an arithmetic bug upstream rather than bad user input.
    """


class KummerUnavailableError(GF2Error, ValueError):
    """The base degree d is odd, so 3 does not divide 2^d - 1."""


class KummerCubeError(GF2Error, ValueError):
    """The normal element is a cube; the degree-3 Kummer step is blocked."""


class InternalInvariantError(GF2Error, RuntimeError):
    """A construction-time invariant failed; signals an arithmetic bug."""


class FormatError(GF2Error, ValueError):
    """A golden or generated table file is malformed."""
