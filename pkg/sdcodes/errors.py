from typing import Optional


class SdCodesError(Exception):
    """Base class for domain errors; the CLI maps these to exit status 1."""


class LengthMismatchError(SdCodesError, ValueError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"length mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class DimensionError(SdCodesError):
    pass


class NotSelfDualError(SdCodesError):
    pass


class AlreadyDoublyEvenError(SdCodesError):
    pass


class SpecFormatError(SdCodesError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapExceededError(SdCodesError):
    pass


class BudgetExceededError(SdCodesError):
    pass


class InconsistentConstraintsError(SdCodesError):
    pass


class OverdeterminedError(SdCodesError):
    pass


class NotInSpanError(SdCodesError):
    pass


class InfeasibleParametersError(SdCodesError):
    pass


class DegenerateNeighborError(SdCodesError):
    pass


class OddVectorError(SdCodesError):
    pass


class ConfigError(SdCodesError, ValueError):
    pass
