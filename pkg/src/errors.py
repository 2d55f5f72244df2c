"""
Error hierarchy for Kats.

Every failure raised by the library derives from KatsError and carries the
name of the operation that raised it plus structured context. Two branches
matter to callers:

- PreconditionError: the inputs violate a documented precondition
  (command-line exit code 2).
- CheckFailed: a verification ran to completion and found a counter-witness
  (command-line exit code 1).
"""

from typing import Any, Dict, Optional


class KatsError(Exception):
    """Base exception for all Kats errors."""

    def __init__(self, operation: str, message: str, context: Optional[Dict[str, Any]] = None):
        self.operation = operation
        self.message = message
        self.context = context or {}
        super().__init__(f"{operation}: {message}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert the error to a dictionary for reports."""
        return {
            "error_type": type(self).__name__,
            "operation": self.operation,
            "message": self.message,
            **{f"context.{key}": value for key, value in self.context.items()},
        }


class PreconditionError(KatsError):
    """Raised when inputs violate an operation's precondition."""
    pass


class CheckFailed(KatsError):
    """Raised when a check finds a counter-witness."""
    pass


class ParseError(PreconditionError):
    """Malformed token or form file."""
    pass


# gf

class CompositeCharacteristic(PreconditionError):
    pass


class DegreeOverflow(PreconditionError):
    pass


class DivisionByZero(PreconditionError, ZeroDivisionError):
    pass


class FieldMismatch(PreconditionError):
    pass


class NoSuchRoot(PreconditionError):
    pass


class NoEmbedding(PreconditionError):
    pass


# characters

class BadOrder(PreconditionError):
    pass


class IncompleteAssignment(PreconditionError):
    pass


class RamifiedOrder(PreconditionError):
    pass


# qseries

class PrecisionUnderflow(PreconditionError):
    pass


class NotCoprime(PreconditionError):
    pass


class BadLevelDivisibility(PreconditionError):
    pass


class CharacteristicDividesLevel(PreconditionError):
    pass


class NotPure(CheckFailed):
    pass


class NonIntegralLevel(CheckFailed):
    pass


class NotNormalizable(PreconditionError):
    pass


class InconsistentFlags(PreconditionError):
    """A form's flags contradict its coefficients."""
    pass


# eisenstein

class ParityViolation(PreconditionError):
    pass


class IllegalE2(PreconditionError):
    pass


class NotPIntegral(PreconditionError):
    pass


class BadPrime(PreconditionError):
    pass


# newform

class BadLevel(PreconditionError):
    pass


class MixedMetadata(PreconditionError):
    pass


class NotEigenform(CheckFailed):
    pass


class SNotDividingLevel(PreconditionError):
    pass


class ThetaNonzero(CheckFailed):
    pass


class NegativeWeight(PreconditionError):
    pass


class LevelNotDivisible(PreconditionError):
    pass


class NotARoot(PreconditionError):
    pass


class HypothesisViolation(PreconditionError):
    pass


class Stage1Fail(CheckFailed):
    pass


class Stage2Fail(CheckFailed):
    pass


class IdentityFail(CheckFailed):
    pass


# corpus

class UnknownEntry(PreconditionError):
    pass
