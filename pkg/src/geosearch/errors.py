"""Exception types shared across the engine."""


class GeoSearchError(Exception):
    """Base class for all engine errors."""


class FormatError(GeoSearchError):
    """A record or file could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class EmptyTableError(GeoSearchError):
    """An embedding file yielded no usable vectors."""


class DimensionMismatchError(GeoSearchError):
    """Vectors of different dimensions were combined."""


class DanglingReferenceError(GeoSearchError):
    """A gazetteer record references a place id that does not exist."""

    def __init__(self, place_id: str):
        self.place_id = place_id
        super().__init__(f"dangling place reference: {place_id}")


class CycleDetectedError(GeoSearchError):
    """The gazetteer partonomy contains a parent cycle."""


class InvalidIriError(GeoSearchError):
    """A string is not an absolute IRI."""


class EmptyQueryError(GeoSearchError):
    """The query contains neither places nor thematic terms."""


class DegenerateBoxError(GeoSearchError):
    """A bounding box has zero area where positive area is required."""


class NoGeometryError(GeoSearchError):
    """A place has neither a bounding box nor a center point."""


class QuerySetMismatchError(GeoSearchError):
    """Two runs being compared do not cover the same query set."""


class UnknownQueryError(GeoSearchError):
    """A run's query id has no judgments at all (strict mode)."""
