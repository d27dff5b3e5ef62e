"""Exception types shared across the package.

Every error raised by the algebra layers derives from AlgebraError so
callers can catch the whole family at once; the CLI maps specific
subclasses to its exit-code contract.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(AlgebraError):
    """Operands carry different coefficient fields."""


class AlphabetMismatch(AlgebraError):
    """Operands are defined over different generator alphabets."""


class ArityMismatch(AlgebraError):
    """Wrong number of images for a substitution or endomorphism."""


class DegreeBoundInvalid(AlgebraError):
    """A degree bound parameter is out of range."""


class MissingGenerator(AlgebraError):
    """An operation needs a generator (e.g. z, or x,y,z) the alphabet lacks."""


class BothZero(AlgebraError):
    """gcd of (0, 0) requested."""


class NotInvertible(AlgebraError):
    """A supplied inverse fails the two-sided inverse check."""


class NotInverse(AlgebraError):
    """certify() found a generator whose round trip is not the identity.

    Attributes: generator (name) and residual (the nonzero difference).
    """

    def __init__(self, generator, residual):
        self.generator = generator
        self.residual = residual
        super().__init__(
            f"round trip of generator {generator!r} differs from identity "
            f"by {residual}"
        )


class NameClash(AlgebraError):
    """A fresh generator name collides with an existing one."""


class MalformedStep(AlgebraError):
    """An elementary step violates its own invariants."""


class NotCoprime(AlgebraError):
    """The operator-coefficient pair (a, b) is not coprime."""


class DoesNotFixZ(AlgebraError):
    """The map was required to fix z but does not."""


class BoundTooSmall(AlgebraError):
    """degree_bound is below the degree of the query polynomial."""


class CapExceeded(AlgebraError):
    """The product enumeration exceeded the configured size cap."""


class VerificationFailed(AlgebraError):
    """An internally constructed identity failed its exact check (a bug)."""


class CertificateFailure(VerificationFailed):
    """A constructed automorphism failed its own inverse check (a bug)."""


class StuckError(AlgebraError):
    """A linear piece resisted the elementary reduction heuristic."""


class ParseError(AlgebraError):
    """Input text does not match the grammar; carries line/column."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownGenerator(ParseError):
    """An identifier in the input is not a generator of the alphabet."""
