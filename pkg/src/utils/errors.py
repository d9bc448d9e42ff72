"""Exception hierarchy shared by every package. exit_code is what the CLI returns."""

from typing import List, Optional


class HyperspecError(Exception):
    exit_code = 1

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "detail": str(self)}


class ParseFailure(HyperspecError):
    pass


class InvalidParameters(HyperspecError):
    pass


class DegenerateSize(InvalidParameters):
    pass


class EmptyList(InvalidParameters):
    pass


class ValidationFailure(HyperspecError):
    def __init__(self, message: str, issues: Optional[List] = None):
        super().__init__(message)
        self.issues = list(issues or [])


class IndexOutOfRange(ValidationFailure):
    pass


class CatalystVertex(ValidationFailure):
    pass


class EmptyHyperedge(ValidationFailure):
    pass


class IsolatedVertex(ValidationFailure):
    pass


class VertexSetMismatch(HyperspecError):
    pass


class OrderMismatch(HyperspecError):
    pass


class NonSymmetricInput(HyperspecError):
    pass


class EmptyKeepSet(HyperspecError):
    pass


class RowDifferenceExceedsC(HyperspecError):
    pass


class UnboundedTestFunction(HyperspecError):
    pass


class GenerationFailure(HyperspecError):
    pass


class UnsupportedFamilyOperator(HyperspecError):
    exit_code = 2


class UnknownLimit(HyperspecError):
    exit_code = 2


class BoundViolation(HyperspecError):
    exit_code = 3


class ConvergenceFailure(HyperspecError):
    exit_code = 3
