"""
Custom exception hierarchy for the tropical Grassmannian fan toolkit
"""

from typing import Any, Dict, Optional, Sequence


class TropGrassException(Exception):
    """Base exception for all toolkit errors"""

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        original_error: Optional[Exception] = None,
    ):
        super().__init__(message)
        self.message = message
        self.details = details.copy() if details else {}
        self.original_error = original_error

    def __str__(self) -> str:
        message = str(self.message) if self.message is not None else "Unknown error"
        if self.details:
            return f"{message} - Details: {self.details}"
        return message


class GeometryException(TropGrassException):
    """Polyhedral kernel errors"""


class DimensionMismatchException(GeometryException):
    """Vectors, polytopes or fans living in different ambient spaces"""

    def __init__(
        self,
        message: str,
        expected: Optional[int] = None,
        actual: Optional[int] = None,
        **kwargs: Any,
    ):
        details = kwargs.get("details", {})
        if expected is not None:
            details["expected"] = expected
        if actual is not None:
            details["actual"] = actual

        super().__init__(message, details, kwargs.get("original_error"))
        self.expected = expected
        self.actual = actual


class IncompleteFanException(GeometryException):
    """A complete fan was required"""


class NonPointedFanException(GeometryException):
    """A pointed fan was required"""

    def __init__(self, message: str, lineality_dim: Optional[int] = None, **kwargs: Any):
        details = kwargs.get("details", {})
        if lineality_dim is not None:
            details["lineality_dim"] = lineality_dim

        super().__init__(message, details, kwargs.get("original_error"))


class FanStructureException(GeometryException):
    """A fan failed a structural certificate (facet pairing, coverage, agreement)"""


class WebDiagramException(TropGrassException):
    """Invalid web diagram parameters or indices"""

    def __init__(
        self,
        message: str,
        k: Optional[int] = None,
        n: Optional[int] = None,
        **kwargs: Any,
    ):
        details = kwargs.get("details", {})
        if k is not None:
            details["k"] = k
        if n is not None:
            details["n"] = n

        super().__init__(message, details, kwargs.get("original_error"))
        self.k = k
        self.n = n


class PositivityException(TropGrassException):
    """A strictly positive value or subtraction-free polynomial was required"""

    def __init__(self, message: str, offending: Any = None, **kwargs: Any):
        details = kwargs.get("details", {})
        if offending is not None:
            details["offending"] = offending

        super().__init__(message, details, kwargs.get("original_error"))
        self.offending = offending


class TreeException(TropGrassException):
    """Plane binary tree or trivalent tree errors"""


class BoundaryPointException(TreeException):
    """A point lies on the boundary between tree cones"""

    def __init__(
        self,
        message: str,
        tied_indices: Optional[Sequence[int]] = None,
        **kwargs: Any,
    ):
        details = kwargs.get("details", {})
        if tied_indices is not None:
            details["tied_indices"] = list(tied_indices)

        super().__init__(message, details, kwargs.get("original_error"))
        self.tied_indices = list(tied_indices) if tied_indices is not None else []


class RefinementException(TropGrassException):
    """A fan does not refine the fan it was compared against"""


class VerificationException(TropGrassException):
    """Computed results disagree with golden data"""

    def __init__(
        self,
        message: str,
        mismatches: Optional[Sequence[str]] = None,
        **kwargs: Any,
    ):
        details = kwargs.get("details", {})
        if mismatches:
            details["mismatches"] = list(mismatches)

        super().__init__(message, details, kwargs.get("original_error"))
        self.mismatches = list(mismatches) if mismatches else []


class FixtureException(TropGrassException):
    """Golden fixture missing or malformed"""

    def __init__(self, message: str, path: Optional[str] = None, **kwargs: Any):
        details = kwargs.get("details", {})
        if path:
            details["path"] = path

        super().__init__(message, details, kwargs.get("original_error"))


class SerializationException(TropGrassException):
    """Fan or TSV file could not be read or written"""

    def __init__(self, message: str, path: Optional[str] = None, **kwargs: Any):
        details = kwargs.get("details", {})
        if path:
            details["path"] = path

        super().__init__(message, details, kwargs.get("original_error"))


class ConfigurationException(TropGrassException):
    """Configuration validation errors"""

    def __init__(self, message: str, config_key: Optional[str] = None, **kwargs: Any):
        details = kwargs.get("details", {})
        if config_key:
            details["config_key"] = config_key

        super().__init__(message, details, kwargs.get("original_error"))
