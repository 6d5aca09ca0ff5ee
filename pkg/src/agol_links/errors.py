"""Exception hierarchy shared across the package."""


class ValidationError(ValueError):
    """Base class for every domain validation failure."""


class CurveIndexError(ValidationError):
    """Curve height index outside 1..4n."""


class CurveWidthError(ValidationError):
    """Curve width outside 2..n-1."""


class CurveParityError(ValidationError):
    """Curve width has the same parity as its height index."""


class AmbientMismatchError(ValidationError):
    """Operands live on punctured disks with different puncture counts."""


class PantsError(ValidationError):
    """A curve collection is not a valid pants decomposition."""


class PathError(ValidationError):
    """A pants-graph path failed construction or certification."""


class TemplateError(ValidationError):
    """A drilled-braid template violates its invariants."""


class SlopeError(ValidationError):
    """A filling system is missing a slope or contains a zero slope."""


class ExportError(ValidationError):
    """A diagram cannot be expressed in the requested code."""


class SchemaError(ValidationError):
    """A persisted artifact violates its schema.

    ``pointer`` is a JSON-pointer-style path to the offending field.
    """

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer
        self.message = message


class DegenerateGeometryError(RuntimeError):
    """Polylines are not in general position (touching or collinear overlap)."""
