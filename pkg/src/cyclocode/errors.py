"""Exception hierarchy. Every error carries a short machine-friendly ``code``."""
from __future__ import annotations


class CycloError(Exception):
    code = "error"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class NotPrime(CycloError):
    code = "NotPrime"


class SizeLimit(CycloError):
    code = "SizeLimit"


class NotSubfield(CycloError):
    code = "NotSubfield"


class ZeroElement(CycloError):
    code = "ZeroElement"


class FieldMismatch(CycloError):
    code = "FieldMismatch"


class ParseError(CycloError, ValueError):
    code = "ParseError"


class DivisionByZeroPoly(CycloError, ZeroDivisionError):
    code = "DivisionByZeroPoly"


class BothZero(CycloError):
    code = "BothZero"


class OrderMismatch(CycloError):
    code = "OrderMismatch"


class NotOneModFour(CycloError):
    code = "NotOneModFour"


class NotCoprime(CycloError):
    code = "NotCoprime"


class UnsupportedBase(CycloError):
    code = "UnsupportedBase"


class FieldDividesN(CycloError):
    code = "FieldDividesN"


class NotADivisor(CycloError):
    code = "NotADivisor"


class NotBiquadraticResidue(CycloError):
    code = "NotBiquadraticResidue"


class NormalizationUnavailable(CycloError):
    code = "NormalizationUnavailable"


class DegreeTooHigh(CycloError):
    code = "DegreeTooHigh"


class NotFactorable(CycloError):
    code = "NotFactorable"


class BudgetExceeded(CycloError):
    code = "BudgetExceeded"


class InconsistentInput(CycloError):
    code = "InconsistentInput"


class Inapplicable(CycloError):
    code = "Inapplicable"


class OutOfHypothesis(CycloError):
    code = "OutOfHypothesis"
