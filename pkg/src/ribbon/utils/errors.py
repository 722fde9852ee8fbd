"""
Ribbon Errors - Exception hierarchy shared by the services and the pipeline
"""

from typing import Any, Dict, List, Optional, Sequence


class RibbonError(Exception):
    """Base class for every error raised by the toolkit"""

    def to_dict(self) -> Dict[str, Any]:
        return {"type": type(self).__name__, "message": str(self)}


class DiagramInputError(RibbonError):
    """Bad input: the CLI maps these to exit code 1"""


class PDSyntaxError(DiagramInputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["position"] = self.position
        return data


class EmptyInputError(DiagramInputError):
    pass


class LabelMultiplicityError(DiagramInputError):
    pass


class NonPlanarError(DiagramInputError):
    pass


class UnknownEdgeError(DiagramInputError):
    pass


class UnknownCensusEntryError(DiagramInputError):
    def __init__(self, name: str, available: Sequence[str]):
        super().__init__(f"unknown census entry {name!r}; available: {', '.join(available)}")
        self.available = list(available)


class HypothesisError(RibbonError):
    """
    The input is well formed but outside the scope of the bound construction.
    Carries optional certificates; the CLI maps these to exit code 2.
    """

    def __init__(self, message: str, certificates: Optional[List[Dict[str, Any]]] = None):
        super().__init__(message)
        self.certificates = certificates or []

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["certificates"] = self.certificates
        return data


class NonAlternatingError(HypothesisError):
    pass


class SignIncompatibleError(HypothesisError):
    pass


class InvalidBipartitionError(HypothesisError):
    pass


class NotRotatedError(HypothesisError):
    pass


class InvalidPresentationError(RibbonError):
    def __init__(self, message: str, violations: Sequence[Any] = ()):
        super().__init__(message)
        self.violations = list(violations)


class TrivialComponentError(RibbonError):
    pass


class CrossingLimitError(RibbonError):
    pass


class EmptyRealizationError(RibbonError):
    pass


class InternalConsistencyError(RibbonError):
    pass
