"""Exception hierarchy shared by all padicore modules.

Domain errors (bad operands, failed mathematical preconditions) map to CLI
exit code 1; parse and usage errors map to exit code 2.
"""


class PadicoreError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PadicoreError):
    """An operand is outside the domain of the requested operation."""


class PrimeMismatchError(DomainError):
    """Two values from different primes were mixed in one operation."""


class FieldMismatchError(DomainError):
    """Two series over different coefficient fields were combined."""


class DivisionByZeroError(DomainError, ZeroDivisionError):
    """Inversion or division by (something indistinguishable from) zero."""


class NotAnIntegerError(DomainError):
    """A p-adic value with negative valuation where an integer is required."""


class PrecisionError(DomainError):
    """The tracked precision is too low to perform or certify the operation."""


class NoRootError(DomainError):
    """The sought root does not exist already in the residue field."""


class DivergenceError(DomainError):
    """A series was evaluated outside its domain of convergence.

    Carries a witness term whose valuation fails to grow.
    """

    def __init__(self, message, witness_index=None, witness_valuation=None):
        super().__init__(message)
        self.witness_index = witness_index
        self.witness_valuation = witness_valuation


class ConditionNotMetError(DomainError):
    """A solver precondition (contraction condition, target ball) fails."""


class IndeterminateConditionError(DomainError):
    """A precondition cannot be decided at the tracked precision."""


class EnumerationGuardError(DomainError):
    """An exhaustive check would exceed its enumeration guard."""


class UnsupportedRuleError(DomainError):
    """A coefficient growth rule outside the supported shapes."""


class ParseError(PadicoreError):
    """Malformed textual or JSON input."""
