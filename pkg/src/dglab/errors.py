"""Exception hierarchy shared by all modules."""
from __future__ import annotations


class DglabError(Exception):
    """Base class for every error raised by the package."""


class DomainError(DglabError, ValueError):
    """A value lies outside the domain of an operation (e.g. t not in (0,1))."""


class LimitError(DglabError):
    """A configured size cap (degree, exponent, index range) was exceeded."""


class ParseError(DglabError, ValueError):
    def __init__(self, message: str, offset: int | None = None, path: str | None = None):
        self.offset = offset
        self.path = path
        loc = []
        if path:
            loc.append(f"at {path}")
        if offset is not None:
            loc.append(f"byte {offset}")
        super().__init__(message + (f" ({', '.join(loc)})" if loc else ""))


class SpecError(DglabError, ValueError):
    """The pair (F, F1) is not admissible."""

    hypothesis = ""


class EmptyF(SpecError):
    hypothesis = "F is non-empty"


class HalfPointViolation(SpecError):
    hypothesis = "1/2 lies in neither F nor F1, or in both"


class PreconditionError(DglabError):
    def __init__(self, message: str, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class NotOrderUnit(PreconditionError):
    pass


class HalfPointInfeasible(PreconditionError):
    """A construction needs a strict sign at t = 1/2 that the input does not have."""


class Infeasible(DglabError):
    def __init__(self, message: str, constraint: int | None = None, certificate=None):
        self.constraint = constraint
        self.certificate = certificate
        super().__init__(message)


class SearchExhausted(DglabError):
    """No verified candidate within the degree/iteration caps (not a proof of infeasibility)."""


class AtomOutsideF(DglabError, ValueError):
    pass
