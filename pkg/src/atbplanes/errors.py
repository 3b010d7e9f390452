"""Exception hierarchy shared by every atbplanes module."""


class ContactPlaneError(ValueError):
    """Base class for all data errors raised by atbplanes."""


class InvalidSpecError(ContactPlaneError):
    """A plane specification violates its invariants (non-positive size, non-finite value)."""


class NotSymmetricError(InvalidSpecError):
    """The closed-form symmetric construction was asked for a yawed or rolled plane."""


class DegeneratePlaneError(ContactPlaneError):
    """Vertices coincide or edges are parallel, so no plane/normal is defined."""


class NonRectangularError(ContactPlaneError):
    """Sampled vertices are too far from a right angle at r1 to be a rectangle."""


class WrongFrameError(ContactPlaneError):
    """A table is in a frame the requested operation does not accept."""


class SchemaError(ContactPlaneError):
    """A CSV file is missing a mandatory column."""


class CsvParseError(ContactPlaneError):
    """A CSV cell could not be read as a number."""


class RowValidationError(ContactPlaneError):
    """A CSV row parsed but describes an invalid plane."""


class DuplicateIdError(ContactPlaneError):
    """Two rows of one table share the same id."""
