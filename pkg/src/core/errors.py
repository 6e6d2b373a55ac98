from typing import Any, List, Optional


class LaminateError(ValueError):
    """Base class of every error raised by the library"""


class ProfileError(LaminateError):
    pass


class ContractViolation(LaminateError):
    pass


class PoleError(LaminateError):
    def __init__(self, message: str, location: Any = None):
        super().__init__(message)
        self.location = location


class WellPosednessError(LaminateError):
    def __init__(self, message: str, pointer: Optional[str] = None):
        super().__init__(message if pointer is None else f"{message} ({pointer})")
        self.pointer = pointer


class ConvergenceError(LaminateError):
    def __init__(self, message: str, trace: Optional[List[str]] = None):
        super().__init__(message)
        self.trace = trace or []
