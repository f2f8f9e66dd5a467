"""Exception types shared across the package."""


class GrpnError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameters(GrpnError, ValueError):
    """Rejected algebra parameters (bad order, bad multicharge, colliding Q)."""


class ComponentMismatch(GrpnError, ValueError):
    """A multipartition does not have the component count an operation requires."""


class EnumerationCapExceeded(GrpnError, RuntimeError):
    """An explicit enumeration was requested beyond the configured size cap."""
