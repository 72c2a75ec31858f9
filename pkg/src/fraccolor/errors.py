"""Exception types shared across the package."""


class FraccolorError(Exception):
    """Base class for all package errors."""


class ResourceLimitError(FraccolorError):
    """An exponential enumeration or solve would exceed a configured cap."""


class ContractViolation(FraccolorError, ValueError):
    """A documented precondition or hypothesis does not hold."""


class CertificateError(FraccolorError):
    """A certificate failed exact verification."""
