"""Exception hierarchy shared by all freeknots modules."""


class FreeKnotError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FreeKnotError):
    """Umbrella for malformed Gauss-code input (CLI maps these to exit 2)."""


class GaussSyntaxError(ParseError):
    """Malformed text: empty component that is not '@', illegal tokens."""


class LabelCountError(ParseError):
    """A chord label occurs a number of times different from two."""


class UnknownChordError(FreeKnotError):
    """A referenced chord label is not present in the diagram."""


class MultiComponentError(FreeKnotError):
    """Operation defined only for one-component diagrams."""


class WrongComponentCountError(FreeKnotError):
    """Operation requires a specific component count (e.g. exactly two)."""


class BudgetExceededError(FreeKnotError):
    """Enumeration size exceeds the configured guard."""


class StaleSiteError(FreeKnotError):
    """A move site does not validate against the diagram it is applied to."""
