"""Exception hierarchy shared by every module of the package."""


class HyperJacError(Exception):
    """Base class for all errors raised by hyperjac."""


# -- field / polynomial plumbing ------------------------------------------

class ModulusMismatch(HyperJacError, ValueError):
    pass


class ZeroInverse(HyperJacError, ZeroDivisionError):
    pass


class DivisionByZeroPoly(HyperJacError, ZeroDivisionError):
    pass


class DuplicateAbscissa(HyperJacError, ValueError):
    pass


class BothZero(HyperJacError, ValueError):
    pass


# -- kernels ----------------------------------------------------------------

class NOutOfRange(HyperJacError, ValueError):
    pass


class NegativeExponentResidue(HyperJacError, ArithmeticError):
    pass


class ZeroConstantTerm(HyperJacError, ZeroDivisionError):
    pass


# -- curves and divisors ----------------------------------------------------

class CurveError(HyperJacError, ValueError):
    pass


class NotMonic(CurveError):
    pass


class WrongDegree(CurveError):
    pass


class SingularCurve(CurveError):
    pass


class SamplingExhausted(HyperJacError, RuntimeError):
    pass


class PointOffCurve(HyperJacError, ValueError):
    pass


class DuplicateX(HyperJacError, ValueError):
    pass


class ShapeError(HyperJacError, ValueError):
    pass


class NotOnZ(HyperJacError, ValueError):
    """A (u, v) pair with the right shape for which u does not divide f - v^2."""


class CurveMismatch(HyperJacError, ValueError):
    pass


class ParseError(HyperJacError, ValueError):
    """Malformed curve file or divisor / polynomial literal."""


# -- group law --------------------------------------------------------------

class DegenerateError(HyperJacError, ArithmeticError):
    """The explicit formulas are undefined on these inputs.

    ``stage`` names the step that failed (``interpolate``, ``compose_u`` or
    ``compose_v``) and ``detail`` the quantity that vanished.
    """

    stage = "unknown"

    def __init__(self, detail: str = "", stage: str | None = None):
        if stage is not None:
            self.stage = stage
        self.detail = detail
        super().__init__(f"{type(self).__name__} in {self.stage}: {detail}" if detail
                         else f"{type(self).__name__} in {self.stage}")

    @property
    def tag(self) -> str:
        return type(self).__name__


class SharedSupport(DegenerateError):
    stage = "interpolate"


class SingularM(DegenerateError):
    stage = "interpolate"


class ZeroOmega(DegenerateError):
    stage = "compose_u"


class ZeroRho(DegenerateError):
    stage = "compose_u"


class SingularQT(DegenerateError):
    stage = "compose_v"


class RetriesExhausted(HyperJacError, RuntimeError):
    def __init__(self, msg: str, last_error: Exception | None = None):
        super().__init__(msg)
        self.last_error = last_error


class InvariantViolation(HyperJacError, AssertionError):
    """An exact identity that must hold after a successful stage did not.

    This always indicates a bug, never a degenerate input.
    """
