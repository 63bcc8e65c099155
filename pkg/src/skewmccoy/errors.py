"""Exception hierarchy shared by every layer of the package."""


class SkewMcCoyError(Exception):
    """Base class for all package errors."""


class InvalidSpecError(SkewMcCoyError, ValueError):
    """A ring, monoid, action or series description could not be understood."""


class RingAxiomError(SkewMcCoyError):
    """Explicit tables do not define a unital ring.

    ``law`` names the first failing axiom and ``witness`` the offending tuple.
    """

    def __init__(self, law, witness, message=None):
        self.law = law
        self.witness = witness
        super().__init__(message or f"ring axiom {law!r} fails at {witness}")


class CapacityError(SkewMcCoyError):
    """An enumeration would exceed a configured cap or budget."""


class InconsistencyError(SkewMcCoyError):
    """Two independent computations of the same quantity disagree."""


class SidednessError(SkewMcCoyError, ValueError):
    """An ideal does not have the sidedness an operation requires."""


class InvalidIdealError(SkewMcCoyError, ValueError):
    pass


class ActionError(SkewMcCoyError, ValueError):
    """Generator images do not define a monoid homomorphism into End(R)."""


class HypothesisError(SkewMcCoyError):
    """A checker was asked to verify a statement whose hypotheses fail."""


class ConfigError(SkewMcCoyError):
    """Campaign configuration is malformed; message carries line/field."""
