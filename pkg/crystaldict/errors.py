"""Exception hierarchy; each class carries its CLI exit code."""
from __future__ import annotations


class CrystalError(Exception):
    exit_code = 1
    kind = "CrystalError"

    def to_diagnostic(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class NotCyclotomic(CrystalError):
    kind = "NotCyclotomic"


class MalformedLevel1(CrystalError):
    kind = "MalformedLevel1"


class MalformedSingleEnd(CrystalError):
    kind = "MalformedSingleEnd"


class LengthMismatch(CrystalError):
    kind = "LengthMismatch"


class BoundExceeded(CrystalError):
    exit_code = 2
    kind = "BoundExceeded"

    def __init__(self, what: str, value: int, bound: int) -> None:
        super().__init__(f"{what} = {value} exceeds the configured bound {bound}")
        self.value = value
        self.bound = bound


class TransportFailure(CrystalError):
    exit_code = 3
    kind = "TransportFailure"


class VerificationFailed(CrystalError):
    exit_code = 3
    kind = "VerificationFailed"


class MalformedInput(CrystalError, ValueError):
    exit_code = 64
    kind = "MalformedInput"


class UsageError(CrystalError):
    exit_code = 64
    kind = "UsageError"


def check_bound(what: str, value: int, bound: int) -> None:
    if value > bound:
        raise BoundExceeded(what, value, bound)
