from typing import Optional


class QdsError(Exception):
    """Base class for errors raised by qdsX."""


class ParameterError(QdsError, ValueError):
    """Raised when an input or a protocol parameter violates its invariants."""


class ConstraintError(ParameterError):
    """Raised when a parameter set fails one of the security constraints.

    Attributes:
        constraint: Name of the violated constraint (``sv_gt_sa``,
            ``forge_margin`` or ``delta_valid``).
    """

    def __init__(self, message: str, constraint: Optional[str] = None) -> None:
        super().__init__(message)
        self.constraint = constraint


class OracleSizeError(ParameterError):
    """Raised when an exact summation is requested for a signature that is too long."""


__all__ = ["QdsError", "ParameterError", "ConstraintError", "OracleSizeError"]
