"""Exception hierarchy.

Two families map onto CLI exit codes: :class:`InputError` (exit 2) for
malformed or unsupported input, :class:`VerificationFailure` (exit 1) when a
mathematical identity fails.  Every error carries a ``witness`` dict naming
the violated identity and, where it applies, the branch point.
"""


class HiggslabError(Exception):
    def __init__(self, message: str = "", **witness):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": self.message,
                "witness": {k: str(v) for k, v in sorted(self.witness.items())}}


class InputError(HiggslabError):
    pass


class VerificationFailure(HiggslabError):
    pass


class ZeroPolynomial(InputError):
    pass


class DegenerateInput(InputError):
    pass


class NotSquare(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotModule(InputError):
    pass


class NotSplit(InputError):
    pass


class NotSplitScalar(InputError):
    pass


class ModelUnsupported(InputError):
    pass


class Indecomposable(InputError):
    pass


class Unsupported(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class RankRule(InputError):
    pass


class FirstClassMismatch(InputError):
    pass


class ParityError(InputError):
    pass


class NonSymmetricForm(VerificationFailure):
    pass


class NonUnimodularForm(VerificationFailure):
    pass


class RankMismatch(VerificationFailure):
    pass


class DeterminantMismatch(VerificationFailure):
    pass


class GammaPlusNotIso(VerificationFailure):
    pass


class TypeMismatch(VerificationFailure):
    pass


class KernelViolation(VerificationFailure):
    pass


class IsometryViolation(VerificationFailure):
    pass


class InternalHolomorphyFailure(VerificationFailure):
    pass
