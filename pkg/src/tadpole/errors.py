"""Exception types raised by the engine."""


class TadpoleError(Exception):
    """Base class for every error raised by this package."""


class BaseMismatchError(TadpoleError):
    pass


class NonUnitError(TadpoleError):
    pass


class IntegrationError(TadpoleError):
    """Raised when a degree map is requested on a base that has none."""


class MissingAssignmentError(TadpoleError):
    pass


class DegeneratePresentationError(TadpoleError):
    pass


class RegistryError(TadpoleError):
    pass


class UnsolvedStratumError(RegistryError):
    pass


class UnderdeterminedError(TadpoleError):
    pass


class NonInvertibleError(TadpoleError):
    pass


class UnsupportedGeometryError(TadpoleError):
    pass


class CatalogError(TadpoleError):
    pass


class NonHomogenizableError(CatalogError):
    pass
