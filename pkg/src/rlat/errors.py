"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures to process status without a lookup table of its own.
"""


class RlatError(Exception):
    exit_code = 1


class ParseError(RlatError):
    exit_code = 2


class QuerySyntaxError(RlatError):
    exit_code = 2


class OrderOutOfRange(RlatError):
    exit_code = 2


class AxiomError(RlatError):
    """Base class for structures that parse but violate an axiom."""

    exit_code = 3

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotALattice(AxiomError):
    pass


class NotAMonoid(AxiomError):
    pass


class ResiduationFails(AxiomError):
    pass


class TrivialLattice(AxiomError):
    pass


class CapacityExceeded(RlatError):
    exit_code = 4


class EmptyGeneratingSet(RlatError, ValueError):
    pass


class EmptyFamily(RlatError, ValueError):
    pass


class LatticeMismatch(RlatError, ValueError):
    pass


class NotASubfilter(RlatError, ValueError):
    pass


class NotAFilter(RlatError, ValueError):
    pass


class InternalInconsistency(RlatError, AssertionError):
    """Two independent computations of the same object disagreed."""

    exit_code = 5
