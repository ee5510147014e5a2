# betarec/errors.py
"""
Exception hierarchy. Everything raised on purpose derives from BetarecError;
the CLI turns it into exit code 1.
"""


class BetarecError(Exception):
    """Base class for domain errors."""


class BaseSpecError(BetarecError, ValueError):
    """Bad defining polynomial, root selector or base string."""


class NotPisotError(BetarecError):
    """The operation needs a Pisot base."""


class NotParryError(BetarecError):
    """The operation needs a Parry base (or the orbit cap was reached)."""


class AlphabetError(BetarecError, ValueError):
    """Digit or symbol outside the alphabet, or arity mismatch."""


class CapExceededError(BetarecError):
    """A construction hit its configured cap."""

    def __init__(self, what: str, cap: int, required: int | None = None):
        self.what = what
        self.cap = cap
        self.required = required
        msg = f"{what}: cap {cap} exceeded"
        if required is not None:
            msg += f" (needs about {required})"
        super().__init__(msg)


class NotClosedError(BetarecError):
    """Automaton is not closed or not trim where the construction needs it."""


class FormulaSyntaxError(BetarecError, ValueError):
    """Formula text does not parse."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnboundVariableError(BetarecError):
    """Formula mentions a variable that is neither free nor bound as expected."""


class SimilarityError(BetarecError):
    """Only similarities of the form (x + a) / beta are supported here."""


class IncompleteKernelError(BetarecError):
    """Kernel saturation stopped at a cap."""


class NotStronglyConnectedError(BetarecError):
    """The graph part an estimate needs is not strongly connected."""
