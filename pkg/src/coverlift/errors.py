"""Exception hierarchy shared by all coverlift modules."""


class CoverliftError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CoverliftError, ValueError):
    """Semantically invalid input (graph, group, voltage, or matrix data)."""


# -- graph validation ------------------------------------------------------

class DuplicateVertexError(ValidationError):
    pass


class LoopEdgeError(ValidationError):
    pass


class DuplicateEdgeError(ValidationError):
    pass


class UnknownEndpointError(ValidationError):
    pass


class DisconnectedError(ValidationError):
    pass


class NotBijectiveError(ValidationError):
    pass


class NotAdjacencyPreservingError(ValidationError):
    pass


class NotATreeError(ValidationError):
    pass


class BaseNotInGraphError(ValidationError):
    pass


# -- abelian groups --------------------------------------------------------

class OrderTooSmallError(ValidationError):
    pass


class SpecMismatchError(ValidationError):
    pass


class IndexOutOfRangeError(ValidationError):
    pass


# -- matrices over Z/p^k ---------------------------------------------------

class NotAUnitError(ValidationError):
    pass


class DimensionMismatchError(ValidationError):
    pass


class ModulusMismatchError(ValidationError):
    pass


class NotInvertibleError(ValidationError):
    pass


# -- voltage assignments ---------------------------------------------------

class InconsistentOppositesError(ValidationError):
    pass


class UnknownArcError(ValidationError):
    pass


class NotTReducedError(ValidationError):
    pass


# -- lifting ---------------------------------------------------------------

class NotUnimodularError(CoverliftError):
    """Homology action matrix is not invertible over the integers.

    Signals an internal inconsistency: a valid automorphism always acts
    by a determinant +-1 matrix on the cycle space.
    """


# -- oracles and CLI -------------------------------------------------------

class BudgetExceededError(CoverliftError):
    """A brute-force enumeration would exceed its configured budget."""


class ParseError(CoverliftError, ValueError):
    """Malformed instance or matrix file."""


class OracleDisagreementError(CoverliftError):
    """A brute-force oracle contradicts the normal-form criterion."""
