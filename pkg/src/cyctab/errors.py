"""Exception hierarchy shared by all modules."""


class CyctabError(ValueError):
    """Base class; every error raised by the package derives from it."""


class MalformedShape(CyctabError):
    pass


class NotAPartition(CyctabError):
    pass


class MuNotContained(CyctabError):
    pass


class NonCanonicalShape(CyctabError):
    """The shape is valid but not in canonical form; ``hint`` holds the canonical string."""

    def __init__(self, message: str, hint: str | None = None):
        super().__init__(message if hint is None else f"{message} (canonical form: {hint})")
        self.hint = hint


class EmptyRow(NonCanonicalShape):
    pass


class ShiftedColumns(NonCanonicalShape):
    pass


class MalformedTableau(CyctabError):
    pass


class NotStandard(CyctabError):
    def __init__(self, message: str, cells=None):
        super().__init__(message)
        self.cells = cells


class ShapeMismatch(CyctabError):
    pass


class NotExteriorCorner(CyctabError):
    pass


class ConnectedRibbonShape(CyctabError):
    """No cyclic descent map exists on a connected ribbon."""


class WrongShapeClass(CyctabError):
    pass
