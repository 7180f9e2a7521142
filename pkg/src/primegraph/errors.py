"""Exception types shared across the library."""


class PrimeGraphError(Exception):
    """Base class for all library errors."""


class CapExceeded(PrimeGraphError):
    """A closure or quotient grew past the configured order cap."""


class DegreeMismatch(PrimeGraphError):
    """Permutations of different degrees were mixed."""


class NotInParent(PrimeGraphError):
    """An element or subgroup does not live inside the expected group."""


class NotNormal(PrimeGraphError):
    """A subgroup required to be normal is not."""


class TrivialGroup(PrimeGraphError):
    """The operation is undefined on the trivial group."""


class NotSoluble(PrimeGraphError):
    """The operation requires a soluble group."""


class NotChiefFactor(PrimeGraphError):
    """The given pair of normal subgroups is not a chief factor."""


class NotADecomposition(PrimeGraphError):
    """The factors do not form a product decomposition of the parent."""


class PreconditionFailed(PrimeGraphError):
    """A theorem checker's hypotheses do not hold for the given input.

    ``witness`` describes the failing requirement (e.g. a factor pair).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(PrimeGraphError):
    """Group file syntax error, with 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BadAction(PrimeGraphError):
    """Invalid parameters for a semidirect-product action."""
