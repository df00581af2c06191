"""Normal integral bases of cyclic cubic fields defined by X^3 - nX^2 - (n+3)X - 1."""
from .classify import CaseTag, FieldInvariants, classify
from .errors import (CaseError, CubicError, InternalInconsistency, InvalidParameter,
                     PreconditionViolated, ReducibleError, SingularBasis,
                     VerificationError, ZeroDenominator)
from .cubic_field import CubicField, FieldElement, new_field

__all__ = [
    "CaseTag", "FieldInvariants", "classify", "CubicField", "FieldElement", "new_field",
    "CaseError", "CubicError", "InternalInconsistency", "InvalidParameter",
    "PreconditionViolated", "ReducibleError", "SingularBasis", "VerificationError",
    "ZeroDenominator",
]
