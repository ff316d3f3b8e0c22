"""Exception types shared across the package."""


class BraidError(Exception):
    """Base class for every error raised by this package."""


class ParseError(BraidError, ValueError):
    """Malformed word text or JSON payload."""


class StrandMismatch(BraidError, ValueError):
    """Two operands live in braid groups with different strand counts."""


class NotEquivalent(BraidError):
    """The inputs cannot be connected because their products differ."""


class BudgetExhausted(BraidError):
    """A search hit its state cap before reaching a conclusion."""


class InapplicableStep(BraidError, ValueError):
    """A relation step was requested at a position where it does not apply."""


class CertificateError(BraidError):
    """A constructed certificate failed its own replay check."""
