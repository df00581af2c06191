"""Exception hierarchy shared by every module."""


class CubicError(Exception):
    """Base class for all library errors."""


class InvalidParameter(CubicError, ValueError):
    """The parameter n = n1/n2 does not define a cyclic cubic field."""


class ZeroDenominator(InvalidParameter):
    pass


class ReducibleError(InvalidParameter):
    """f_n has a rational root; ``root`` holds it."""

    def __init__(self, n1, n2, root):
        self.n1, self.n2, self.root = n1, n2, root
        super().__init__(f"f_n is reducible for n = {n1}/{n2}: rational root {root}")


class SingularBasis(CubicError, ValueError):
    pass


class PreconditionViolated(CubicError, ValueError):
    pass


class CaseError(CubicError, ValueError):
    """An operation was applied to the wrong ramification case."""


class InternalInconsistency(CubicError, AssertionError):
    """A proved identity failed; indicates a bug rather than bad input."""


class VerificationError(CubicError):
    """A certificate check failed. ``check`` names it."""

    def __init__(self, check, detail=""):
        self.check = check
        msg = check if not detail else f"{check}: {detail}"
        super().__init__(msg)
