# core/hecke_core/errors.py
from typing import Any, Dict


class HeckeError(ValueError):
    """Base error carrying a machine-readable kind"""
    kind = "hecke_error"

    def __init__(self, message: str, kind: str = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "message": str(self)}

    def __reduce__(self):
        # keep the kind when errors cross process boundaries
        return self.__class__, (str(self), self.kind)


class ConfigurationError(HeckeError):
    kind = "invalid_config"


class RingMismatchError(HeckeError):
    kind = "ring_mismatch"


class UnsupportedConfigurationError(HeckeError):
    kind = "unsupported_configuration"


class NotInQuotientError(HeckeError):
    kind = "not_in_quotient"


class IdentityViolation(HeckeError):
    """A checked identity failed on computed data"""
    kind = "identity_violation"


class InternalConsistencyError(HeckeError):
    kind = "internal_consistency"
