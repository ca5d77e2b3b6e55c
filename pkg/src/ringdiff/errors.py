"""Exception types shared across the package."""


class InvalidLatticeError(ValueError):
    """The lattice cannot be built (site count below 2)."""


class InvalidParameterError(ValueError):
    """A physical parameter is outside its allowed range."""


class NormalizationError(ValueError):
    """A state vector or probability vector is not normalized."""


class ConsistencyError(RuntimeError):
    """A closed-form result and its independent numerical check disagree."""
