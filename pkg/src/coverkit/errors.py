"""Exception hierarchy with machine-readable error codes.

Every error carries a stable ``code`` string so the CLI can emit it in
JSON reports without parsing exception text.
"""


class CoverkitError(Exception):
    """Base class for all coverkit errors."""

    code = "error"


class PeriodOverflowError(CoverkitError):
    """An lcm period exceeded the configured 64-bit bound."""

    code = "period-overflow"


class SingularMatrixError(CoverkitError):
    """A matrix required to be nonsingular is singular."""

    code = "singular-matrix"


class BruteForceCapError(CoverkitError):
    """Subset enumeration was requested beyond the brute-force cap."""

    code = "brute-force-cap"


class CosetExplosionError(CoverkitError):
    """A coset enumeration would exceed the configured size cap."""

    code = "coset-explosion"


class NotInSpectrumError(CoverkitError):
    """A target value does not occur as a subset-sum fractional part."""

    code = "not-in-spectrum"


class InternalInvariantError(CoverkitError):
    """A guaranteed witness was not found; indicates a bug, not bad input."""

    code = "internal-invariant-violation"


class ConstructionError(CoverkitError):
    """Construction parameters violate the builder's requirements."""

    code = "invalid-construction"


class ReducibleMinPolyError(CoverkitError):
    """The defining polynomial admitted a zero divisor, so it is not irreducible."""

    code = "reducible-min-poly"


class ParseError(CoverkitError):
    """An input file is malformed; the message carries the locus."""

    code = "parse-error"


class ValidationError(CoverkitError):
    """A well-formed input violates a documented precondition."""

    code = "validation-error"
