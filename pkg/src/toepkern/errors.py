"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can
serialize failures uniformly.
"""


class ToepkernError(Exception):
    code = "error"


class ZeroPolynomial(ToepkernError):
    code = "zero_polynomial"


class ZeroDenominator(ToepkernError):
    code = "zero_denominator"


class PoleOnCircle(ToepkernError):
    code = "pole_on_circle"


class BoundaryAmbiguous(ToepkernError):
    """A root sits so close to the edge of the on-circle band that the
    inside/on-circle/outside verdict would flip under a slightly different
    tolerance.  Raised instead of guessing."""

    code = "boundary_ambiguous"


class RootEscapedDisk(ToepkernError):
    """Computed zeros of an inner function left the open unit disk."""

    code = "root_escaped_disk"


class NotInHardySpace(ToepkernError):
    code = "not_in_hardy_space"


class NotInModelSpace(ToepkernError):
    code = "not_in_model_space"


class NotInKernel(ToepkernError):
    code = "not_in_kernel"


class InsufficientDegree(ToepkernError):
    code = "insufficient_degree"


class ConstantInnerFactor(ToepkernError):
    code = "constant_inner_factor"


class DegenerateShift(ToepkernError):
    code = "degenerate_shift"


class CarlesonViolation(ToepkernError):
    """The outer multiplier has a zero on the circle, so the representation
    claim cannot be certified by the pole/zero location reduction."""

    code = "carleson_violation"


class NormTooLarge(ToepkernError):
    code = "norm_too_large"


class NotInner(ToepkernError):
    code = "not_inner"


class NotDividing(ToepkernError):
    code = "not_dividing"


class DimensionMismatch(ToepkernError):
    code = "dimension_mismatch"


class ParseError(ToepkernError):
    code = "parse_error"

    def __init__(self, message, position, expected=()):
        super().__init__("%s at position %d" % (message, position))
        self.message = message
        self.position = position
        self.expected = tuple(expected)


class StabilityWarning(UserWarning):
    """Numerical kernel dimension changed between truncation sizes M and 2M."""
