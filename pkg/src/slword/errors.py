"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`SlwordError`.
The CLI maps :class:`DomainError` subclasses to exit status 2.
"""


class SlwordError(Exception):
    """Base class for all library errors."""


class DomainError(SlwordError):
    """An input that is well formed but outside an operation's domain."""


class InvalidModulus(DomainError):
    pass


class NotPrime(DomainError):
    pass


class ReduciblePolynomial(DomainError):
    pass


class NotAUnit(DomainError):
    pass


class RingMismatch(DomainError):
    pass


class NotAField(DomainError):
    pass


class NotPrimePower(DomainError):
    pass


class BudgetExceeded(DomainError):
    pass


class WordTooShort(DomainError):
    pass


class NotInAbar(DomainError):
    pass


class EmptyWord(DomainError):
    pass


class UnknownVerdict(DomainError):
    """The partial rewrite system got stuck and no fallback was requested."""


class MalformedInput(SlwordError):
    pass


class LetterOutOfRange(MalformedInput):
    pass


class NotInSL2(DomainError):
    """Matrix entries whose determinant is not one."""


class InvariantViolation(SlwordError):
    """An internal guarantee failed. Always a bug."""
