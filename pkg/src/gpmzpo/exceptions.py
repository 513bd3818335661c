"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class ContractViolation(ValueError):
    """An input breaks a structural precondition (wrong basis tag, non-Hermitian block...)."""


class UndefinedPhaseError(DomainError):
    """A phase difference was requested for a vanishing field component."""

    def __init__(self, component):
        self.component = component
        super().__init__(f"phase of component {component!r} is undefined (component vanishes)")
