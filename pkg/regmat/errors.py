# errors.py
from __future__ import annotations

import logging
from typing import Any

logger = logging.getLogger("regmat." + __name__)


class RegmatError(ValueError):
    """
    Base class for every error raised by regmat.

    Subclasses ValueError so callers that only care about "bad input" can
    catch the builtin; the text codecs raise ParseError for malformed files.

    """


class NonSquare(RegmatError):
    pass


class UnknownLabel(RegmatError):
    pass


class DuplicateLabel(RegmatError):
    pass


class ShapeMismatch(RegmatError):
    pass


class FieldMismatch(RegmatError):
    pass


class SingularMatrix(RegmatError):
    pass


class ZeroPivot(RegmatError):
    pass


class SizeLimitExceeded(RegmatError):
    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class BadFactor(RegmatError):
    pass


class LabelMismatch(RegmatError):
    pass


class NotABase(RegmatError):
    pass


class NotTU(RegmatError):
    pass


class GroundMismatch(RegmatError):
    pass


class LabelOverlap(RegmatError):
    pass


class BadOverlap(RegmatError):
    pass


class ZeroRow(RegmatError):
    pass


class ZeroCol(RegmatError):
    pass


class PatternViolation(RegmatError):
    def __init__(self, condition: str, detail: str = ""):
        message = condition if not detail else f"{condition}: {detail}"
        super().__init__(message)
        self.condition = condition
        self.detail = detail


class NotCanonicalForm(RegmatError):
    pass


class PartitionMismatch(RegmatError):
    pass


class ParseError(RegmatError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class _TreeError(RegmatError):
    """
    Errors raised while evaluating a good tree; ``path`` names the node.
    """

    def __init__(self, path: tuple[Any, ...], detail: str):
        where = "/".join(str(p) for p in path) or "<root>"
        super().__init__(f"{where}: {detail}")
        self.path = path
        self.detail = detail


class CertInvalid(_TreeError):
    pass


class SumPreconditionFailed(_TreeError):
    pass
