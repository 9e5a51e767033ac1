"""Exception types shared across the package."""


class EntropiaError(Exception):
    """Base class for every error raised by this package."""


class ZeroInput(EntropiaError, ValueError):
    """An operation that needs a nonzero argument received zero."""


class NotDivisible(EntropiaError, ArithmeticError):
    """Exact division was requested but no exact quotient exists."""


class DivisionByZero(EntropiaError, ZeroDivisionError):
    """A specialization hit a zero value at a negative exponent."""

    def __init__(self, symbol, exponent):
        self.symbol = symbol
        self.exponent = exponent
        super().__init__(f"symbol {symbol} is zero but appears with exponent {exponent}")


class DegenerateLine(EntropiaError):
    """Random line probes kept dropping degree; no verdict could be reached."""


class SingularOrbit(EntropiaError, ZeroDivisionError):
    """An iterate that must be inverted turned out to be zero."""

    def __init__(self, index, detail=""):
        self.index = index
        msg = f"singular orbit at index {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class TermBudgetExceeded(EntropiaError):
    """A symbolic iterate would exceed the configured term budget."""

    def __init__(self, index, terms, budget, partial=None):
        self.index = index
        self.terms = terms
        self.budget = budget
        self.partial = partial
        super().__init__(f"term budget {budget} exceeded at index {index} ({terms} terms)")


class InvalidWeights(EntropiaError, ValueError):
    """Weights passed to build_reduction do not define a valid recurrence."""


class GoodDomainError(EntropiaError, ValueError):
    """A lattice region cannot be filled from the given band."""


class NoBracket(EntropiaError, ValueError):
    """The root bracket does not show a sign change."""


class MultipleRoots(EntropiaError, ValueError):
    """Numerically repeated roots make the Vandermonde system singular."""


class InsufficientData(EntropiaError, ValueError):
    """Too few usable data points for an estimate."""
