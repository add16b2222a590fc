"""Exception taxonomy for geometric and harness errors."""


class GeometryError(ValueError):
    """Base class for all geometric precondition violations."""


class EmptyInput(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class ZeroNormal(GeometryError):
    pass


class ZeroDirection(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


class ZeroVolume(GeometryError):
    pass


class InvalidSpec(GeometryError):
    pass


class InvalidLambda(GeometryError):
    pass


class DegenerateDirections(GeometryError):
    pass


class NotASymmetry(GeometryError):
    pass


class NotAValuationWitness(GeometryError):
    pass


class ParseError(ValueError):
    """Raised on malformed input files; carries a locus description."""

    def __init__(self, message, locus=None):
        super().__init__(message if locus is None else f"{locus}: {message}")
        self.locus = locus
