"""Exception hierarchy.

Every error raised by the package derives from :class:`SkewPBWError`.  The
``CapExceeded`` branch groups the resource guards so that front ends can map
them to a single exit status.
"""


class SkewPBWError(Exception):
    pass


class RingMismatch(SkewPBWError):
    """Elements or maps of two different rings were combined."""


class InvalidTable(SkewPBWError):
    pass


class AxiomViolation(SkewPBWError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} fails at {self.witness}")


class LiteralError(SkewPBWError):
    """A ring-element literal could not be parsed."""


class UnsupportedInfinite(SkewPBWError):
    """An enumerating operation was requested on an infinite ring."""


class ClosureDiverges(SkewPBWError):
    pass


class PresentationInconsistent(SkewPBWError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class HypothesesFail(SkewPBWError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotOre(SkewPBWError):
    pass


class DenominatorNotRegular(SkewPBWError):
    pass


class SigmaDoesNotPreserveS(SkewPBWError):
    pass


class UnknownEntry(SkewPBWError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DefinitionError(SkewPBWError):
    """A definition document failed schema or semantic validation."""


class ParseError(SkewPBWError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class CapExceeded(SkewPBWError):
    pass


class SizeCapExceeded(CapExceeded):
    pass


class SearchSpaceCapExceeded(CapExceeded):
    pass


class RewriteBudgetExceeded(CapExceeded):
    pass
