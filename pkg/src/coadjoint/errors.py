"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input does not satisfy a documented precondition."""


class NotLorentzError(ValidationError):
    """Matrix fails ``tL G L = G`` at the requested tolerance."""


class DegenerateMomentum(ValidationError):
    """Momentum is null, spacelike or otherwise not reducible."""


class StructuralError(RuntimeError):
    """Internal inconsistency (basis/dimension bug), never a data problem."""
